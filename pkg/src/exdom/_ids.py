"""Integer ids shared by the compiled and pure-Python kernel lanes.

The compiled extension (``exdom._core``) hardcodes the same values; keep the
two in sync when adding forms.
"""

# 1-form integrands f(z) (meaning f(z) dz) for the closed-form families.
VCAT_DPHI = 0     # -1
VCAT_DH = 1       # 1/z
VCAT_W1 = 2       # (1/z^2 - 1)/2
VCAT_W2 = 3       # -i (1 + 1/z^2)/2
HCAT_DPHI = 4     # -(1+z)^2 / (2 z^2)
HCAT_DH = 5       # (z^2 - 1) / (2 z^2)
HCAT_W1 = 6       # -1/z
HCAT_W2 = 7       # -i (1 + z^2) / (2 z^2)
SCHERK_DPHI = 8   # -2 sin(2a) (z+1)^2 / D(z),  D = z^4 - 2 cos(2a) z^2 + 1
SCHERK_DH = 9     # 2 sin(2a) (1 - z^2) / D(z)
SCHERK_W1 = 10    # -4 sin(2a) z / D(z)
SCHERK_W2 = 11    # -2i sin(2a) (z^2 + 1) / D(z)

FORM_NAMES = {
    VCAT_DPHI: "vcat_dphi", VCAT_DH: "vcat_dh",
    VCAT_W1: "vcat_w1", VCAT_W2: "vcat_w2",
    HCAT_DPHI: "hcat_dphi", HCAT_DH: "hcat_dh",
    HCAT_W1: "hcat_w1", HCAT_W2: "hcat_w2",
    SCHERK_DPHI: "scherk_dphi", SCHERK_DH: "scherk_dh",
    SCHERK_W1: "scherk_w1", SCHERK_W2: "scherk_w2",
}

# invertible forward maps (single-valued branches on the right half-plane)
MAP_HCAT = 0      # phi(z) = 1/(2z) - Log z - z/2
MAP_SCHERK = 1    # principal branch of the Scherk phi (cut between punctures)

# integrate_segments status codes
STATUS_OK = 0
STATUS_TOL = 1
STATUS_NONFINITE = 2
