import numpy as np
from math import factorial

np.set_printoptions(precision=6, suppress=False, linewidth=200)

# ---------------- E1 fixture ----------------
R = np.array([
 [0.445, -0.219, 0.489, 0.770, 0.589, -0.00333, 0.950],
 [0.481, -0.892, -0.806, -0.743, -0.641, -0.422, 0.701],
 [-0.735, 0.747, 0.750, -0.879, 0.884, -0.0114, -0.260],
 [0.528, 0.357, 0.707, 0.986, 0.201, 0.320, 0.207],
 [0.899, 0.727, 0.206, -0.792, 0.109, 0.895, 0.672],
 [-0.400, -0.259, -0.988, 0.459, 0.681, 0.843, 0.788],
 [0.326, -0.530, -0.168, 0.141, 0.0158, -0.496, -0.907]])
T = np.array([
 [0.959, 0.314, -0.237, 0.232, -0.608, 0.199, -0.164],
 [-0.744, -0.112, 0.239, 0.384, -0.132, 0.299, 0.817],
 [0.921, 0.681, -0.302, 0.942, -0.781, 0.908, -0.0566],
 [0.465, -0.641, 0.505, -0.892, -0.830, 0.715, -0.170],
 [-0.807, 0.978, -0.185, -0.619, -0.923, 0.322, -0.690],
 [0.0672, 0.893, 0.620, 0.711, -0.631, -0.636, -0.211],
 [-0.742, -0.0257, 0.536, -0.952, -0.325, 0.0701, 0.196]])
A = R + 1j*T
ev = np.linalg.eigvals(A)
ev_re = sorted(ev, key=lambda z: -z.real)
print("E1 eigenvalues by desc real part:")
for z in ev_re: print(f"  {z.real:+.4f} {z.imag:+.4f}i   |z|={abs(z):.4f}")
ev_mod = sorted(ev, key=lambda z: -abs(z))
print("E1 by desc modulus:", [f"{z:.4f}" for z in ev_mod])

# ---------------- Hessenberg ----------------
def build_D(alpha, alpha0):
    # alpha[j-1] = a_j for j=1..n ; alpha0 = a_0 seed
    n = len(alpha)
    a = [alpha0] + list(alpha)   # a[k] = alpha_k, k=0..n
    rho = [np.sqrt(1.0 - abs(a[j])**2) for j in range(n+1)]  # rho[j] for alpha_j, j>=1 used
    D = np.zeros((n, n), dtype=complex)
    for i in range(1, n+1):
        for j in range(i, n+1):
            prod = 1.0
            for l in range(i, j):   # l = i..j-1 -> rho_l
                prod *= rho[l]
            D[i-1, j-1] = -a[j]*np.conj(a[i-1])*prod
        if i >= 2:
            D[i-1, i-2] = rho[i-1]
    return D

def top_moduli(D, k=4):
    ev = np.linalg.eigvals(D)
    ev = sorted(ev, key=lambda z: -abs(z))
    return ev[:k]

n = 15
for name, f in [("exp(-k^2)", lambda k: np.exp(-k*k)),
                ("1/((k^2)!)", lambda k: 1.0/factorial(k*k)),
                ("1/((k!)^2)", lambda k: 1.0/factorial(k)**2)]:
    alpha = [f(k) for k in range(1, n+1)]
    for a0name, a0 in [("alpha0=1", 1.0), ("alpha0=0", 0.0), ("alpha0=f(0)", f(0)), ("alpha0=-1", -1.0), ("alpha0=f(1)", f(1))]:
        if max(abs(x) for x in alpha) >= 1.0:
            # |alpha_1|=1 for factorial sequences: rho_1 = 0, matrix decouples; still buildable
            pass
        D = build_D(alpha, a0)
        t3 = top_moduli(D)
        print(f"{name:12s} {a0name:12s} top4 =", [f"{z.real:+.3e}{z.imag:+.3e}i" for z in t3])

print()
print("targets: exp: {-0.0233, 0.0059, -0.00069}   fact: {-0.0417, 6.58e-5, 1.81e-8}")
