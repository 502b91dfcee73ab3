import numpy as np
from math import lgamma, exp

def fact_inv(m):  # 1/m!
    if m > 170: return 0.0
    return exp(-lgamma(m+1))

SEQ = {
 "exp(-k^2)":   lambda k: exp(-float(k)**2) if k*k < 700 else 0.0,
 "1/((k^2)!)":  lambda k: fact_inv(k*k),
 "1/((k!)^2)":  lambda k: fact_inv(k)**2,
}
TARGET = {
 "exp(-k^2)":  [-0.0233, 0.0059, -0.00069],
 "1/((k^2)!)": [-0.0417, 6.58e-5, 1.81e-8],
 "1/((k!)^2)": [-0.0417, 6.58e-5, 1.81e-8],
}

def build(a, rho_idx_shift=0):
    # a[k] = alpha_k for k=0..n ; rho_j = sqrt(1-|a[j+shift]|^2)
    n = len(a)-1
    def rho(j):
        idx = j + rho_idx_shift
        if idx < 0 or idx > n: return 1.0
        v = 1.0 - abs(a[idx])**2
        return np.sqrt(max(v, 0.0))
    D = np.zeros((n,n), complex)
    for i in range(1, n+1):
        for j in range(i, n+1):
            p = 1.0
            for l in range(i, j): p *= rho(l)
            D[i-1,j-1] = -a[j]*np.conj(a[i-1])*p
        if i >= 2: D[i-1,i-2] = rho(i-1)
    return D

def top3(D):
    ev = sorted(np.linalg.eigvals(D), key=lambda z: -abs(z))
    return ev[:3]

def match(t3, tgt):
    ok = True
    for z, w in zip(t3, tgt):
        if abs(z.imag) > 0.2*abs(w): ok = False; break
        if abs(z.real - w) > 0.25*abs(w): ok = False; break
    return ok

n = 15
hits = []
for name, f in SEQ.items():
    for off in (-1, 0, 1):
        alphas = [f(k+off) for k in range(1, n+1)]
        if any(abs(x) > 1.0 for x in alphas): continue
        for a0 in [0.0, 1.0, -1.0, f(0+off) if off>=0 else None, f(1+off), 0.5, -0.5]:
            if a0 is None: continue
            for shift in (0,):
                a = [a0] + alphas
                D = build(a, shift)
                t3 = top3(D)
                tag = f"{name} off={off} a0={a0:+.4f}"
                if match(t3, TARGET[name]):
                    hits.append((tag, t3))
                    print("HIT:", tag, [f"{z:.4g}" for z in t3])

# scan a0 continuously for exp
f = SEQ["exp(-k^2)"]
alphas = [f(k) for k in range(1, n+1)]
print("\nscan a0 for exp(-k^2), print top3 vs a0:")
for a0 in np.linspace(-1, 1, 41):
    D = build([a0]+alphas)
    t3 = top3(D)
    print(f"a0={a0:+.3f} " + "  ".join(f"{z.real:+.4e}{z.imag:+.3e}i" for z in t3))
