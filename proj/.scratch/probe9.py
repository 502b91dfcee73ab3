import numpy as np
from scipy.linalg import expm as sexpm

N=7; theta=0.4
def ladder(conv):
    a=np.zeros((N,N))
    if conv=="paper":   # a e_k = sqrt(k) e_{k-1}, k=2..N
        for k in range(2,N+1): a[k-2,k-1]=np.sqrt(k)
    elif conv=="std":   # a e_k = sqrt(k-1) e_{k-1}
        for k in range(2,N+1): a[k-2,k-1]=np.sqrt(k-1)
    return a

h=np.diag([(2*(k-1)+1)/2 for k in range(1,N+1)])
# printed targets
P11=0.348126; P13=-0.510541; P22=1.05673; P77=9.8266; P75=-4.04439; P66=7.50957; P17=0.0216558

for conv in ("paper","std"):
    a=ladder(conv); ad=a.T
    base=a@a-ad@ad
    for cname,c in [("i*th",1j*theta),("-i*th",-1j*theta),("i*th/2",0.5j*theta),("-i*th/2",-0.5j*theta),
                    ("th",theta),("-th",-theta),("th/2",theta/2),("-th/2",-theta/2)]:
        T=sexpm(c*base)
        H=T@h@np.linalg.inv(T)
        ok11=abs(H[0,0]-P11)<5e-3*abs(P11)+1e-4
        if ok11:
            print(f"{conv:5s} c={cname:7s}: H11={H[0,0]:.6f} H13={H[0,2]:.6f} H22={H[1,1]:.6f} H77={H[6,6]:.5f} H75={H[4,6].imag:+.5f}i(col) H_75={H[6,4]:.5f} H17={H[0,6]:.7f}")
        else:
            print(f"{conv:5s} c={cname:7s}: H11={H[0,0]:.6f}")
