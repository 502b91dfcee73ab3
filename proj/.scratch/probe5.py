import numpy as np
from math import lgamma, exp
import itertools

def fact_inv(m):
    if m > 170: return 0.0
    return exp(-lgamma(m+1))
fexp = lambda k: exp(-float(k)**2) if k*k < 700 else 0.0
fk2  = lambda k: fact_inv(k*k)

tgt_exp=[-0.0233,0.0059,-0.00069]
tgt_k2=[-0.0417,6.58e-5,1.81e-8]

def build(a, pshift, sshift, rho_kind):
    n=len(a)-1
    def rho(j):
        if j<0 or j>n: return 1.0
        x=abs(a[j])
        if rho_kind==0: v=1.0-x*x
        else: v=(1.0-x)*(1.0+x)  # same; placeholder
        return np.sqrt(max(v,0.0))
    D=np.zeros((n,n),complex)
    for i in range(1,n+1):
        for j in range(i,n+1):
            p=1.0
            for l in range(i+pshift, j+pshift): p*=rho(l)
            D[i-1,j-1]=-a[j]*np.conj(a[i-1])*p
        if i>=2: D[i-1,i-2]=rho(i-1+sshift)
    return D

def topk(D,k=3):
    return sorted(np.linalg.eigvals(D),key=lambda z:-abs(z))[:k]

def err3(t,tgt):
    e=0.0
    for z,w in zip(t,tgt):
        if abs(z.imag)>0.3*abs(w): return 9e9
        e=max(e,abs(z-w)/abs(w))
    return e

n=15
results=[]
for off in (0,1):
    alex=[fexp(k+off) for k in range(1,n+1)]
    alk2=[fk2(k+off) for k in range(1,n+1)]
    if any(abs(x)>1.0 for x in alk2):
        alk2=None
    for a0 in (1.0,-1.0,0.0,fexp(off) if off>0 else None):
        if a0 is None: continue
        for pshift in (-1,0,1):
            for sshift in (-1,0,1):
                for neg in (False,True):
                    Dx=build([a0]+alex,pshift,sshift,0)
                    if neg: Dx=-Dx
                    te=err3(topk(Dx),tgt_exp)
                    tk=9e9
                    if alk2 is not None:
                        Dk=build([a0]+alk2,pshift,sshift,0)
                        if neg: Dk=-Dk
                        tk=err3(topk(Dk),tgt_k2)
                    results.append((max(te,tk),te,tk,off,a0,pshift,sshift,neg,
                                    [f"{z.real:+.4e}" for z in topk(Dx)]))
results.sort(key=lambda r:r[0])
for r in results[:10]:
    print(f"joint={r[0]:.3f} exp_err={r[1]:.3f} k2_err={r[2]:.3f} off={r[3]} a0={r[4]:+.2f} psh={r[5]} ssh={r[6]} neg={r[7]} exp_top={r[8]}")
