"""
Confined spectra, two ways
==========================

Shooting (Numerov + Brent) against a finite-difference matrix, and the
Fisher information from expectation values against its gradient form.
"""

from hydroentropy import hydrogenic as hy
from hydroentropy import measures as me
from hydroentropy import oracle as orc

rc = 2.0
fd = orc.fd_matrix_energies(0, 1.0, rc, count=3)
for k, e_fd in enumerate(fd):
    level = hy.cha_energy(k + 1, 0, 1.0, rc)
    print(f"ns level {k}: shooting {level.energy:+.10f}   finite difference {e_fd:+.10f}")

_, amp_r, amp_p = hy.confined_amplitudes(2, 0, 1.0, 5.0)
fast = me.fisher(hy.expectation_values(amp_r, amp_p), 0, 0).I_rho
slow = orc.fisher_gradient_form(amp_r.density, 0, 5.0)
print(f"2s in r_c = 5: I_rho = {fast:.9f} (moments)  {slow:.9f} (gradient)")
