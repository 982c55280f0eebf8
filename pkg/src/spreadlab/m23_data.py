"""Hard-coded generators for the Mathieu group M23 in its degree-23 action.

Provenance: the classical generating pair for M23 acting on 23 points, a full
23-cycle together with a product of four 5-cycles commuting into the Steiner
system S(4,7,23); this is the pair commonly reproduced from Conway's
construction of M24 (M23 arising as the stabilizer of the extra point).  The
order 10200960 = 2^7*3^2*5*7*11*23 is re-verified against the stabilizer
chain every time the group is constructed, so a corrupted table cannot go
unnoticed.
"""

M23_DEGREE = 23
M23_ORDER = 10200960

# 1-based cycle notation, mirroring the printed sources.
M23_GENERATORS = (
    "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
    "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
)
