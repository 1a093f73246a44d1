"""
Squeezing a hydrogen atom
=========================

A 1s electron in a hard spherical box of radius r_c. As the box shrinks the
position density is compressed and the momentum density spreads out; the
entropic measures track that trade-off.
"""

from hydroentropy import measures as me

# The free atom first, for reference
free = me.measure_state("free", 1, 0).flat()
print(f"free 1s      S = {free['S_total']:.6f}   I_rho = {free['I_rho']:.6f}   I_pi = {free['I_pi']:.6f}")

# Now a few cavities. Shannon entropy in position space drops as the box
# closes in, momentum entropy rises.
for rc in (0.5, 1.0, 2.5, 5.0, 10.0):
    rep = me.measure_state("confined", 1, 0, r_c=rc)
    print(
        f"r_c = {rc:5.1f}   E = {rep.energy:+10.5f}   "
        f"S_rho = {rep.shannon.S_rho:+.5f}   S_pi = {rep.shannon.S_pi:.5f}   S = {rep.shannon.total:.5f}"
    )

# The total entropy is not monotone: it dips below the free value at
# moderate confinement before rising again in tiny boxes.
