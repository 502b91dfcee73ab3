import numpy as np
from math import lgamma, exp
from scipy.linalg import expm as scipy_expm

def fact_inv(m):
    if m > 170: return 0.0
    return exp(-lgamma(m+1))
fexp = lambda k: exp(-float(k)**2) if k*k < 700 else 0.0
fk2  = lambda k: fact_inv(k*k)

def build(a):   # display-literal, a[0]=alpha0
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

def topk(D,k=4):
    return sorted(np.linalg.eigvals(D),key=lambda z:-abs(z))[:k]

n=15
print("== validated built-in kinds: alpha_j=(-1)^(j+1) f(j+1), alpha0=+1 ==")
for name,f in [("exp",fexp),("k2fact",fk2)]:
    a=[1.0]+[((-1)**(j+1))*f(j+1) for j in range(1,n+1)]
    D=build(a)
    t=topk(D)
    print(name, [f"{z.real:+.6e}{z.imag:+.1e}i" for z in t])
    # check positive subdiagonal + upper hessenberg
    sub=np.diag(D,-1); print("   subdiag min", sub.real.min(), "max|imag|", abs(sub.imag).max(),
                             "below-sub max", max(abs(D[i,j]) for i in range(n) for j in range(n) if i>j+1))
# by real part (for dynamical largest/smallest)
for name,f in [("exp",fexp),("k2fact",fk2)]:
    a=[1.0]+[((-1)**(j+1))*f(j+1) for j in range(1,n+1)]
    ev=sorted(np.linalg.eigvals(build(a)),key=lambda z:-z.real)
    print(name,"largestRe:",f"{ev[0]:.4e}","smallestRe:",f"{ev[-1]:.4e}")

print()
print("== Swanson ==")
N=7; theta=0.4
def ladder(paper):
    aop=np.zeros((N,N))
    if paper:   # a e_k = sqrt(k) e_{k-1}, k=2..N
        for k in range(2,N+1): aop[k-2,k-1]=np.sqrt(k)
    else:       # standard: a e_k = sqrt(k-1) e_{k-1}
        for k in range(2,N+1): aop[k-2,k-1]=np.sqrt(k-1)
    return aop

h=np.diag([(2*(k-1)+1)/2 for k in range(1,N+1)])
Hprint_13=-0.510541j; Hprint_11=0.348126; Hprint_77=9.8266; Hprint_75=-4.04439j
for paper in (True,False):
    a=ladder(paper); ad=a.conj().T
    G=1j*theta*(a@a-ad@ad)
    T=scipy_expm(G)
    H=T@h@np.linalg.inv(T)
    print("paper-conv" if paper else "std-conv",
          "H11=%.6f H13=%.6fi H77=%.5f H75=%.5fi" % (H[0,0].real, H[0,2].imag, H[6,6].real, H[6,4].imag))
    ev=sorted(np.linalg.eigvals(H).real)
    print("   spectrum:", [f"{x:.6f}" for x in ev], " max|imag|:", abs(np.linalg.eigvals(H).imag).max())
    # checkerboard
    bad = max(abs(H[i,j]) for i in range(N) for j in range(N) if (i+j)%2==1)
    print("   checkerboard max |odd-parity entry|:", bad, "  nonherm:", abs(H-H.conj().T).max())
