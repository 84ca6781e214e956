"""F2-module machinery for the metacyclic group of order 21 and for S7.

A module is a subspace of F2^n together with action endomorphisms given as
callables on bit vectors.  The order-21 group <sigma, tau | sigma^7 = tau^3 =
1, tau sigma tau^-1 = sigma^2> has four irreducibles over F2: the trivial one,
a 2-dimensional D (sigma acts trivially), and two 3-dimensional modules E1, E2
distinguished by which of

    c1 = sigma^3 + sigma + 1,      c2 = sigma^3 + sigma^2 + 1

annihilates them.  The corner spaces C_j(M) = {m : tau m = m, c_j m = 0} count
the E_j multiplicities: M' = (sigma-1)M decomposes as E1^dim(C1) + E2^dim(C2).
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2 import F2Matrix, Subspace, echelon


class F2Module:
    """Subspace of F2^n closed under a list of acting endomorphisms."""

    def __init__(self, ambient_dim, basis_vectors, action, check_closed=True):
        self.n = ambient_dim
        self.space = Subspace(basis_vectors, ambient_dim)
        self.action = list(action)
        if check_closed:
            for g in self.action:
                for v in self.space.basis:
                    if not self.space.contains(g(v)):
                        raise ValueError("subspace not closed under the action")

    @property
    def dim(self):
        return self.space.dim

    def action_matrix(self, g):
        """Matrix of g on the module in coordinates of the canonical basis."""
        cols = []
        for v in self.space.basis:
            c = self.space.coords(g(v))
            if c is None:
                raise ValueError("action does not preserve the module")
            cols.append(c)
        rows = [0] * self.dim
        for j, c in enumerate(cols):
            for i in range(self.dim):
                if (c >> i) & 1:
                    rows[i] |= 1 << j
        return F2Matrix(rows, self.dim)


def generate_submodule(ambient_dim, gens, action) -> F2Module:
    """Smallest action-closed subspace containing the generators."""
    basis = {}
    frontier = []

    def reduce(v):
        while v:
            p = v.bit_length() - 1
            if p in basis:
                v ^= basis[p]
            else:
                return v
        return 0

    def insert(v):
        v = reduce(v)
        if v:
            basis[v.bit_length() - 1] = v
            frontier.append(v)
            return True
        return False

    for g0 in gens:
        insert(g0)
    while frontier:
        v = frontier.pop()
        for g in action:
            insert(g(v))
    return F2Module(ambient_dim, list(basis.values()), action, check_closed=False)


@dataclass
class CornerData:
    """Corner spaces and decomposition multiplicities of a Delta-module."""

    c1: Subspace
    c2: Subspace
    m0: Subspace  # sigma-fixed part
    n_triv: int
    n_d: int
    n1: int
    n2: int
    dim: int

    @property
    def multiplicities(self):
        return (self.n_triv, self.n_d, self.n1, self.n2)

    def consistent(self):
        return self.dim == self.n_triv + 2 * self.n_d + 3 * (self.n1 + self.n2)


def corner_spaces(module: F2Module, sigma, tau) -> CornerData:
    """Corner invariants of a module under (sigma, tau) of orders (7, 3).

    sigma, tau are callables on ambient bit vectors; the relations sigma^7 =
    tau^3 = id and tau sigma tau^-1 = sigma^2 are verified on the module.
    """
    dim = module.dim
    s = module.action_matrix(sigma)
    t = module.action_matrix(tau)
    ident = F2Matrix.identity(dim)
    if s**7 != ident or t**3 != ident:
        raise ValueError("acting generators fail the order relations")
    if t * s != (s * s) * t:
        raise ValueError("acting generators fail tau*sigma = sigma^2*tau")

    from .f2 import nullspace

    def kernel_space(mat):
        return Subspace(nullspace(mat), dim)

    s3 = s * s * s
    c1_op = s3 + s + ident
    c2_op = s3 + (s * s) + ident
    tau_fix = kernel_space(t + ident)
    c1 = tau_fix.intersection(kernel_space(c1_op))
    c2 = tau_fix.intersection(kernel_space(c2_op))
    m0 = kernel_space(s + ident)
    m0_tau_fix = m0.intersection(tau_fix)
    n_triv = m0_tau_fix.dim
    rest = m0.dim - n_triv
    if rest % 2:
        raise ValueError("sigma-fixed part is not trivial + D-isotypic")
    data = CornerData(
        c1=c1,
        c2=c2,
        m0=m0,
        n_triv=n_triv,
        n_d=rest // 2,
        n1=c1.dim,
        n2=c2.dim,
        dim=dim,
    )
    if not data.consistent():
        raise ValueError("corner decomposition inconsistent with module dimension")
    return data


def corner_spaces_ambient(module: F2Module, sigma, tau):
    """Like corner_spaces but with the corner bases lifted to ambient vectors."""
    data = corner_spaces(module, sigma, tau)

    def lift(sub: Subspace) -> Subspace:
        vecs = []
        for coords in sub.basis:
            acc = 0
            c = coords
            while c:
                b = c & -c
                acc ^= module.space.basis[b.bit_length() - 1]
                c ^= b
            vecs.append(acc)
        return Subspace(vecs, module.n)

    return data, lift(data.c1), lift(data.c2)


def submodule_span(module: F2Module, vectors, action):
    """R-span of given ambient vectors inside the module's ambient space."""
    return generate_submodule(module.n, vectors, action)
