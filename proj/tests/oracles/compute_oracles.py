#!/usr/bin/env python3
"""Independent brute-force oracle for frozen expected values in the C++ tests.

Shares no code with the C++ engines: formulas are nested tuples, valuations
are Python dicts, and every sweep is a plain itertools.product.
"""
from itertools import product

def E(x, y): return ("e", x, y)
def Not(a): return ("not", a)
def Or(a, b): return ("or", a, b)
def And(a, b): return Not(Or(Not(a), Not(b)))
def Imp(a, b): return Or(Not(a), b)

def ev(f, v):
    if f[0] == "e": return v[(f[1], f[2])]
    if f[0] == "not": return not ev(f[1], v)
    return ev(f[1], v) or ev(f[2], v)

def atoms(f, out=None):
    out = [] if out is None else out
    if f[0] == "e":
        if (f[1], f[2]) not in out: out.append((f[1], f[2]))
    else:
        for g in f[1:]: atoms(g, out)
    return out

def sub(f, s):
    if f[0] == "e": return E(s.get(f[1], f[1]), s.get(f[2], f[2]))
    return (f[0],) + tuple(sub(g, s) for g in f[1:])

def ax1(a, b, c=None): return Imp(E(a, b), E(a, a))
def ax2(a, b, c): return Imp(And(E(a, b), E(b, c)), E(a, c))
def ax3(a, b, c): return Imp(And(E(a, b), E(b, c)), E(b, a))
def ax3s(a, b, c=None): return Imp(And(E(a, b), E(b, b)), E(b, a))

def admissible(pool, third=ax3):
    grid = [(x, y) for x in pool for y in pool]
    inst = []
    for a, b, c in product(pool, repeat=3):
        inst += [ax1(a, b), ax2(a, b, c), third(a, b, c)]
    res = []
    for bits in product([False, True], repeat=len(grid)):
        v = dict(zip(grid, bits))
        if all(ev(i, v) for i in inst): res.append(frozenset(k for k in grid if v[k]))
    return res

def entails(gamma, goal):
    at = []
    for g in gamma + [goal]: atoms(g, at)
    for bits in product([False, True], repeat=len(at)):
        v = dict(zip(at, bits))
        if all(ev(g, v) for g in gamma) and not ev(goal, v): return False
    return True

def instances(body, vars_, pool):
    return [sub(body, dict(zip(vars_, img))) for img in product(pool, repeat=len(vars_))]

A_S3 = Imp(And(E("a","b"), E("b","c")), And(E("b","b"), Imp(E("c","d"), And(E("a","d"), E("b","a")))))
A_t = Imp(E("a","b"), And(E("a","a"), Imp(E("b","c"), And(E("a","c"), E("b","a")))))

print("atoms(A_t) =", atoms(A_t))
for n in (1, 2, 3):
    print(f"admissible count pool size {n} =", len(admissible("abcd"[:n])))
for n in (1, 2, 3, 4):
    same = set(admissible("abcd"[:n])) == set(admissible("abcd"[:n], ax3s))
    print(f"kanai pool {n} equal =", same)
adm2 = admissible("ab")
cex = [v for v in adm2 if ("a","b") in v and ("b","a") not in v]
print("eab->eba counterexamples over {a,b} =", [sorted(c) for c in cex])
for pool in ("abc", "abcd"):
    g = instances(A_S3, "abcd", pool)
    print(f"A_S3 pool {len(pool)}: Ax1 {entails(g, ax1('a','b'))} Ax2 {entails(g, ax2('a','b','c'))} Ax3 {entails(g, ax3('a','b','c'))}")
g = instances(ax2("a","b","c"), "abc", "abc")
print("Ax2 alone pool 3:", len(g), "instances; Ax1", entails(g, ax1("a","b")))
g = instances(ax1("a","b"), "ab", "abc")
print("Ax1 alone pool 3: Ax2", entails(g, ax2("a","b","c")), "Ax3", entails(g, ax3("a","b","c")))
