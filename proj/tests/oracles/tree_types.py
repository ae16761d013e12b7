"""Brute-force enumeration of cover types: tau over Pruefer-coded trees, sigma by lifting.

Run: python3 tree_types.py
"""
import itertools
from collections import defaultdict

def set_partitions(items, maxblocks):
    items=list(items)
    if not items:
        yield []
        return
    first,rest=items[0],items[1:]
    for p in set_partitions(rest,maxblocks):
        for i in range(len(p)):
            yield p[:i]+[[first]+p[i]]+p[i+1:]
        if len(p)<maxblocks:
            yield [[first]]+p

# tree: (nverts, edges list, mk dict label->vertex)
def valence(t,v):
    n,E,mk=t
    return sum(1 for e in E if v in e)+sum(1 for x in mk.values() if x==v)

def stabilize(t,keep):
    n,E,mk=t
    mk={k:v for k,v in mk.items() if k in keep}
    verts=set(range(n)); E=[tuple(e) for e in E]
    changed=True
    while changed:
        changed=False
        for v in sorted(verts):
            val=sum(1 for e in E if v in e)+sum(1 for x in mk.values() if x==v)
            if val<3:
                inc=[e for e in E if v in e]
                if not inc:
                    continue
                e=inc[0]; u=e[0] if e[1]==v else e[1]
                # contract v into u
                E.remove(e)
                E=[tuple(u if x==v else x for x in f) for f in E]
                mk={k:(u if x==v else x) for k,x in mk.items()}
                verts.remove(v); changed=True; break
    # relabel
    vl=sorted(verts); idx={v:i for i,v in enumerate(vl)}
    return (len(vl),[tuple(sorted((idx[a],idx[b]))) for a,b in E],{k:idx[x] for k,x in mk.items()})

def canon(t):
    n,E,mk=t
    adj=defaultdict(list)
    for a,b in E: adj[a].append(b); adj[b].append(a)
    labs=defaultdict(list)
    for k,v in mk.items(): labs[v].append(str(k))
    def enc(v,p):
        ch=sorted(enc(c,v) for c in adj[v] if c!=p)
        return '('+','.join(sorted(labs[v]))+'|'+''.join(ch)+')'
    return min(enc(r,-1) for r in range(n))

def stable_trees(S):
    S=list(S)
    # generate by: all trees via recursive splitting - brute force: set of canonical forms
    res={}
    # build by brute force: number of vertices k from 1..len(S)-2
    m=len(S)
    for k in range(1,m-1):
        # labeled trees on k vertices via Prufer
        if k==1: trees=[[]]
        elif k==2: trees=[[(0,1)]]
        else:
            trees=[]
            for pr in itertools.product(range(k),repeat=k-2):
                pr=list(pr); deg=[1]*k
                for x in pr: deg[x]+=1
                E=[]
                for x in pr:
                    for l in range(k):
                        if deg[l]==1:
                            E.append((min(l,x),max(l,x))); deg[l]-=1; deg[x]-=1; break
                u=[i for i in range(k) if deg[i]==1]
                E.append((u[0],u[1])); trees.append(E)
        for E in trees:
            for assign in itertools.product(range(k),repeat=m):
                mk=dict(zip(S,assign)); t=(k,E,mk)
                if all(valence(t,v)>=3 for v in range(k)):
                    c=canon(t)
                    if c not in res: res[c]=t
    return list(res.values())

def path(t,a,b):
    n,E,mk=t
    adj=defaultdict(list)
    for x,y in E: adj[x].append(y); adj[y].append(x)
    prev={a:None}; st=[a]
    while st:
        x=st.pop()
        for y in adj[x]:
            if y not in prev: prev[y]=x; st.append(y)
    p=[b]
    while p[-1]!=a: p.append(prev[p[-1]])
    return p[::-1]

def types(d,n):
    B=['*']+list(range(1,n+1))
    # phi inverse: b_* <- a_*, b_2 <- a_1, b_{i+1 mod n} <- a_i (i=2..n)
    pre={'*':'*',2:1}
    for i in range(2,n+1):
        j=(i+1)%n
        if j==0: j=n
        pre[j]=i
    out=[]
    for tau in stable_trees(B):
        tn,tE,tmk=tau
        P=path(tau,tmk['*'],tmk[2]); Pset=set(P)
        adj=defaultdict(list)
        for x,y in tE: adj[x].append(y); adj[y].append(x)
        # off-spine directions: (w in P, neighbor u not in P) -> subtree marks
        dirs=[]
        for w in P:
            for u in adj[w]:
                if u in Pset: continue
                # subtree
                sub={u}; st=[u]
                while st:
                    x=st.pop()
                    for y in adj[x]:
                        if y!=w and y not in sub: sub.add(y); st.append(y)
                marks=[pre[b] for b,v in tmk.items() if v in sub]
                dirs.append((w,u,sub,marks))
        for parts in itertools.product(*[list(set_partitions(m,d)) for (_,_,_,m) in dirs]):
            # build sigma
            sv=0; sE=[]; smk={}; phi={}; deg={}
            spine={}
            for w in P:
                spine[w]=sv; phi[sv]=w; deg[sv]=d; sv+=1
            for i in range(len(P)-1):
                sE.append((spine[P[i]],spine[P[i+1]]))
            for b,v in tmk.items():
                if v in Pset: smk[pre[b]]=spine[v]
            for (w,u,sub,marks),part in zip(dirs,parts):
                blocks=[set(bl) for bl in part]+[set() for _ in range(d-len(part))]
                for bl in blocks:
                    # copy of subtree
                    cm={}
                    for x in sub: cm[x]=sv; phi[sv]=x; deg[sv]=1; sv+=1
                    sE.append((spine[w],cm[u]))
                    for x,y in tE:
                        if x in sub and y in sub: sE.append((cm[x],cm[y]))
                    for b,v in tmk.items():
                        if v in sub and pre[b] in bl: smk[pre[b]]=cm[v]
            sigma=(sv,sE,smk)
            labels=[1]+list(range(2,n+1))
            sb=stabilize(sigma,set(labels))
            tb=stabilize(tau,set(range(1,n+1)))
            ok=canon(sb)==canon(tb)
            cnt=1
            for (_,_,_,m),part in zip(dirs,parts):
                k=len(part)
                for j in range(1,k): cnt*= (d-j)
            out.append((tau,sigma,ok,cnt,canon(tau),parts))
    return out

if __name__=='__main__':
    import sys
    for (d,n) in [(2,5),(2,4),(3,4),(4,4),(5,4),(6,4)]:
        ts=types(d,n)
        f=[t for t in ts if t[2]]
        print(d,n,'total',len(ts),'filtered',len(f),'sum counts',sum(t[3] for t in f))
