import numpy as np
from math import exp

fexp = lambda k: exp(-float(k)**2) if k*k < 700 else 0.0
tgt=[-0.0233,0.0059,-0.00069]

def build(a):
    n=len(a)-1
    rho=[0.0]+[np.sqrt(max(1.0-abs(a[j])**2,0.0)) for j in range(1,n+1)]
    D=np.zeros((n,n),complex)
    for i in range(1,n+1):
        for j in range(i,n+1):
            p=1.0
            for l in range(i,j): p*=rho[l]
            D[i-1,j-1]=-a[j]*np.conj(a[i-1])*p
        if i>=2: D[i-1,i-2]=rho[i-1]
    return D

def topk(D,k=3):
    return sorted(np.linalg.eigvals(D),key=lambda z:-abs(z))[:k]

def err3(t):
    e=0.0
    for z,w in zip(t,tgt):
        if abs(z.imag)>0.3*abs(w): return 9e9
        e=max(e,abs(z-w)/abs(w))
    return e

n=15
best=[]
for off in (0,1):
    base=[fexp(k+off) for k in range(1,n+1)]
    for sname,sgn in [("+",[1]*(n+1)),("-",[-1]*(n+1)),
                      ("alt0",[(-1)**k for k in range(n+1)]),
                      ("alt1",[(-1)**(k+1) for k in range(n+1)])]:
        al=[sgn[k+1]*base[k] for k in range(n)]
        for a0 in list(np.arange(-1,1.0001,0.02))+[fexp(1+off),-fexp(1+off)]:
            for neg in (False,True):
                D=build([a0]+al)
                if neg: D=-D
                e=err3(topk(D))
                best.append((e,off,sname,round(float(a0),4),neg,[f"{z.real:+.4e}" for z in topk(D)]))
best.sort(key=lambda r:r[0])
for r in best[:12]: print(r)
