"""
Circular states in closed form
==============================

States with n - l = 1 have node-less radial functions, and every entropic
moment reduces to ratios of gamma functions. Compare them with plain
numerical quadrature.
"""

from hydroentropy import circular_analytic as ca
from hydroentropy import hydrogenic as hy
from hydroentropy import measures as me

for n in range(1, 7):
    cs = ca.CircularState(n)
    r_r, r_p, _ = ca.circ_renyi(cs, 0.6, 3.0)
    s_r, s_p = ca.circ_shannon(cs)
    # same moment by quadrature over the analytic amplitude
    amp_r, _ = hy.free_amplitudes(n, n - 1)
    w_num = me.entropic_moment_radial(amp_r, 0.6)
    w_cf = ca.circ_moments(cs, 0.6, "r")
    print(f"n={n}  R_r={r_r:9.5f}  R_p={r_p:9.5f}  S_r={s_r:8.5f}  S_p={s_p:8.5f}  |dw|={abs(w_num - w_cf):.1e}")

# Two routes to the momentum Shannon entropy, digamma sums and a
# log-moment integral, agree to rounding
for n in (1, 5, 11):
    cs = ca.CircularState(n)
    print(n, ca.circ_shannon(cs)[1], ca.circ_shannon_p_alt(cs))
