"""Trigonometric polynomials on the torus and restricted L2 norms.

The torus is the fundamental cell [-1/2, 1/2)^n with characters
e(t) = exp(2*pi*i*t).  A trigonometric polynomial is stored sparsely as
an (M, n) integer frequency array plus M complex amplitudes.  Full-torus
norms are exact coefficient sums (Parseval); norms restricted to a box
are closed-form sine sums; norms restricted to a ball fall back to
adaptive Gauss-Legendre panels around an exact one-dimensional core.

Positive definiteness here always means "every Fourier coefficient is
real and nonnegative".  Functions whose coefficient sequence is not
square-summable (legitimate members of the wider positive definite
class) are outside the finite representation used in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

TWO_PI = 2.0 * math.pi

# Guards for the dense/pairwise strategy switch in norm_sq_domain.
_PAIRWISE_MAX_TERMS = 3000
_DENSE_MAX_CELLS = 40_000_000
_DENSE_MAX_AXIS = 4200


def _as_freq_array(freqs, dim: int) -> np.ndarray:
    arr = np.asarray(freqs, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1) if dim == 1 else arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] != dim:
        raise ValueError(f"frequency array must have shape (M, {dim})")
    return arr


def _lex_order(freqs: np.ndarray) -> np.ndarray:
    # np.lexsort sorts by the last key first; feed columns reversed so the
    # first coordinate is the primary key.
    return np.lexsort(tuple(freqs[:, k] for k in range(freqs.shape[1] - 1, -1, -1)))


class TrigPolynomial:
    """Sparse trigonometric polynomial sum_nu c_nu e(nu . x).

    Coefficients are canonicalized on construction: duplicate frequencies
    merged, exact zeros dropped, rows sorted lexicographically.  The
    ``is_real`` and ``is_pos_def`` marks are verified, not trusted.
    """

    __slots__ = ("dim", "freqs", "coeffs", "is_real", "is_pos_def")

    def __init__(self, dim, freqs, coeffs, is_real=False, is_pos_def=False):
        dim = int(dim)
        if dim < 1:
            raise ValueError("dim must be a positive integer")
        freqs = _as_freq_array(freqs, dim)
        coeffs = np.asarray(coeffs, dtype=np.complex128).ravel()
        if len(coeffs) != len(freqs):
            raise ValueError("freqs and coeffs length mismatch")

        if len(freqs):
            uniq, inverse = np.unique(freqs, axis=0, return_inverse=True)
            if len(uniq) != len(freqs):
                merged = np.zeros(len(uniq), dtype=np.complex128)
                np.add.at(merged, inverse.ravel(), coeffs)
                freqs, coeffs = uniq, merged
            else:
                order = _lex_order(freqs)
                freqs, coeffs = freqs[order], coeffs[order]
            keep = coeffs != 0
            if not keep.all():
                freqs, coeffs = freqs[keep], coeffs[keep]

        freqs.setflags(write=False)
        coeffs.setflags(write=False)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "freqs", freqs)
        object.__setattr__(self, "coeffs", coeffs)

        if is_pos_def:
            if np.any(coeffs.imag != 0.0) or np.any(coeffs.real < 0.0):
                raise ValueError("is_pos_def requires real nonnegative coefficients")
            is_real = True
        if is_real and not _is_hermitian(freqs, coeffs):
            raise ValueError("is_real requires Hermitian-symmetric coefficients")
        object.__setattr__(self, "is_real", bool(is_real))
        object.__setattr__(self, "is_pos_def", bool(is_pos_def))

    def __setattr__(self, name, value):  # immutable by convention
        raise AttributeError("TrigPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_dict(cls, dim: int, table: dict, **flags) -> "TrigPolynomial":
        if not table:
            return cls(dim, np.zeros((0, dim), dtype=np.int64), [], **flags)
        freqs = []
        coeffs = []
        for nu, c in table.items():
            if np.isscalar(nu):
                nu = (nu,)
            if len(nu) != dim:
                raise ValueError("frequency arity does not match dim")
            freqs.append(tuple(int(v) for v in nu))
            coeffs.append(complex(c))
        return cls(dim, np.array(freqs, dtype=np.int64), coeffs, **flags)

    @classmethod
    def constant(cls, dim: int, value=1.0) -> "TrigPolynomial":
        return cls(dim, np.zeros((1, dim), dtype=np.int64), [value],
                   is_real=(complex(value).imag == 0.0),
                   is_pos_def=(complex(value).imag == 0.0 and complex(value).real >= 0.0))

    # -- basic queries -------------------------------------------------

    @property
    def nterms(self) -> int:
        return len(self.coeffs)

    def coeff(self, nu) -> complex:
        nu = np.asarray(nu, dtype=np.int64).reshape(1, self.dim)
        if not self.nterms:
            return 0.0 + 0.0j
        hit = np.all(self.freqs == nu, axis=1)
        idx = np.nonzero(hit)[0]
        return complex(self.coeffs[idx[0]]) if len(idx) else 0.0 + 0.0j

    def degree(self) -> int:
        if not self.nterms:
            return 0
        return int(np.max(np.abs(self.freqs)))

    def __repr__(self):
        return (f"TrigPolynomial(dim={self.dim}, terms={self.nterms}, "
                f"degree={self.degree()}, real={self.is_real}, pos_def={self.is_pos_def})")

    # -- canonical text form --------------------------------------------

    def to_text(self) -> str:
        """Canonical serialization: one line per coefficient,
        ``nu_1 ... nu_n  re im``, rows in lexicographic frequency order."""
        lines = [f"# dim {self.dim}"]
        for nu, c in zip(self.freqs, self.coeffs):
            head = " ".join(str(int(v)) for v in nu)
            lines.append(f"{head}  {c.real:.17g} {c.imag:.17g}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TrigPolynomial":
        dim = None
        freqs = []
        coeffs = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                parts = line[1:].split()
                if len(parts) == 2 and parts[0] == "dim":
                    dim = int(parts[1])
                continue
            parts = line.split()
            if dim is None:
                dim = len(parts) - 2
            if len(parts) != dim + 2:
                raise ValueError(f"malformed coefficient line: {raw!r}")
            freqs.append([int(v) for v in parts[:dim]])
            coeffs.append(complex(float(parts[dim]), float(parts[dim + 1])))
        if dim is None:
            raise ValueError("empty serialization")
        poly = cls(dim, np.array(freqs, dtype=np.int64).reshape(-1, dim), coeffs)
        real = _is_hermitian(poly.freqs, poly.coeffs)
        pos_def = real and bool(np.all(poly.coeffs.imag == 0.0) and np.all(poly.coeffs.real >= 0.0))
        if real or pos_def:
            poly = cls(dim, poly.freqs, poly.coeffs, is_real=real, is_pos_def=pos_def)
        return poly


def _is_hermitian(freqs: np.ndarray, coeffs: np.ndarray) -> bool:
    """c_{-nu} == conj(c_nu) for every stored frequency."""
    if not len(freqs):
        return True
    neg = -freqs
    order = _lex_order(neg)
    neg_sorted = neg[order]
    conj_sorted = np.conj(coeffs[order])
    # freqs is already lex-sorted, so the mirrored support must coincide.
    if neg_sorted.shape != freqs.shape or not np.array_equal(neg_sorted, freqs):
        return False
    return bool(np.array_equal(conj_sorted, coeffs))


# ---------------------------------------------------------------------------
# Domains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Domain:
    """Symmetric region: cube (box) delta*I^n, Euclidean ball, or a product.

    ``delta`` is the halfwidth for cubes and the radius for balls.  Torus
    operations additionally require the region to fit inside the open
    fundamental cell; that check happens at the point of use so the same
    type can describe regions of R^n (real-line counterexamples use large
    balls).
    """

    kind: str
    dim: int
    delta: float = 0.0
    factors: tuple = ()

    @staticmethod
    def cube(halfwidth: float, dim: int) -> "Domain":
        if halfwidth <= 0:
            raise ValueError("cube halfwidth must be positive")
        return Domain("cube", int(dim), float(halfwidth))

    @staticmethod
    def interval(halfwidth: float) -> "Domain":
        return Domain.cube(halfwidth, 1)

    @staticmethod
    def ball(radius: float, dim: int) -> "Domain":
        if radius <= 0:
            raise ValueError("ball radius must be positive")
        return Domain("ball", int(dim), float(radius))

    @staticmethod
    def product(*factors: "Domain") -> "Domain":
        if not factors:
            raise ValueError("product of zero domains")
        dim = sum(f.dim for f in factors)
        return Domain("product", dim, 0.0, tuple(factors))

    def volume(self) -> float:
        if self.kind == "cube":
            return (2.0 * self.delta) ** self.dim
        if self.kind == "ball":
            return ball_volume(self.dim, self.delta)
        return float(np.prod([f.volume() for f in self.factors]))

    def half(self) -> "Domain":
        """The shrunk copy (1/2)D."""
        if self.kind == "cube":
            return Domain.cube(self.delta / 2.0, self.dim)
        if self.kind == "ball":
            return Domain.ball(self.delta / 2.0, self.dim)
        return Domain.product(*[f.half() for f in self.factors])

    def scaled(self, factor: float) -> "Domain":
        if self.kind == "product":
            return Domain.product(*[f.scaled(factor) for f in self.factors])
        return Domain(self.kind, self.dim, self.delta * factor)

    def enclosing_halfwidth(self) -> float:
        """Smallest delta with D contained in delta*I^n."""
        if self.kind == "product":
            return max(f.enclosing_halfwidth() for f in self.factors)
        return self.delta

    def box_halfwidths(self):
        """Per-axis halfwidths when D is a box, else None."""
        if self.kind == "cube":
            return np.full(self.dim, self.delta)
        if self.kind == "product":
            parts = [f.box_halfwidths() for f in self.factors]
            if any(p is None for p in parts):
                return None
            return np.concatenate(parts)
        return None


def ball_volume(dim: int, radius: float) -> float:
    """Volume of a Euclidean ball: r^n pi^(n/2) / Gamma(n/2 + 1)."""
    return radius ** dim * math.pi ** (dim / 2.0) / math.gamma(dim / 2.0 + 1.0)


def _require_inside_cell(domain: Domain):
    if domain.enclosing_halfwidth() >= 0.5:
        raise ValueError("domain exceeds the fundamental cell [-1/2, 1/2)^n")


# ---------------------------------------------------------------------------
# Evaluation and norms
# ---------------------------------------------------------------------------

def evaluate(f: TrigPolynomial, x) -> np.ndarray | float | complex:
    """Evaluate f at one point (shape (n,)) or a batch (shape (..., n)).

    Returns real values when f is marked real-valued.
    """
    x = np.asarray(x, dtype=np.float64)
    single = (x.ndim == 1)
    if f.dim == 1 and x.ndim == 0:
        x = x.reshape(1)
        single = True
    if x.shape[-1] != f.dim:
        raise ValueError("point arity does not match polynomial dimension")
    pts = x.reshape(-1, f.dim)
    if not f.nterms:
        out = np.zeros(len(pts), dtype=np.complex128)
    else:
        phase = pts @ f.freqs.T.astype(np.float64)
        out = np.exp(2j * math.pi * phase) @ f.coeffs
    if f.is_real:
        out = out.real
    out = out.reshape(x.shape[:-1])
    if single:
        return out[()] if out.ndim == 0 else out
    return out


def norm_sq_torus(f: TrigPolynomial) -> float:
    """Parseval: integral of |f|^2 over the torus equals sum |c_nu|^2."""
    if not f.nterms:
        return 0.0
    return float(np.sum(np.abs(f.coeffs) ** 2))


def _box_factor(lam: np.ndarray, halfwidth: float) -> np.ndarray:
    """integral_{-d}^{d} e(lam * t) dt = sin(2 pi lam d) / (pi lam), 2d at 0."""
    lam = np.asarray(lam, dtype=np.float64)
    out = np.empty_like(lam)
    zero = (lam == 0.0)
    out[zero] = 2.0 * halfwidth
    nz = ~zero
    out[nz] = np.sin(TWO_PI * lam[nz] * halfwidth) / (math.pi * lam[nz])
    return out


def _axis_lattice(column: np.ndarray):
    """(offset, stride, size) of the smallest arithmetic grid holding a column."""
    lo = int(column.min())
    hi = int(column.max())
    if lo == hi:
        return lo, 1, 1
    stride = int(np.gcd.reduce((column - lo).astype(np.int64)))
    stride = max(stride, 1)
    return lo, stride, (hi - lo) // stride + 1


def _densify(f: TrigPolynomial):
    """Dense coefficient tensor on the minimal per-axis arithmetic lattice.

    Returns (tensor, strides) or None when the dense form would be too big.
    """
    if not f.nterms:
        return None
    offs, strides, sizes = [], [], []
    for k in range(f.dim):
        lo, st, sz = _axis_lattice(f.freqs[:, k])
        offs.append(lo)
        strides.append(st)
        sizes.append(sz)
    cells = int(np.prod([int(s) for s in sizes], dtype=np.int64))
    if cells > _DENSE_MAX_CELLS or max(sizes) > _DENSE_MAX_AXIS:
        return None
    idx = tuple(((f.freqs[:, k] - offs[k]) // strides[k]) for k in range(f.dim))
    tensor = np.zeros(tuple(sizes), dtype=np.complex128)
    tensor[idx] = f.coeffs
    if np.all(tensor.imag == 0.0):
        tensor = tensor.real.copy()
    return tensor, np.array(strides, dtype=np.int64)


def _norm_sq_box_pairwise(f: TrigPolynomial, widths: np.ndarray) -> float:
    weight = np.ones((f.nterms, f.nterms))
    for k in range(f.dim):
        lam = f.freqs[:, k][:, None] - f.freqs[:, k][None, :]
        weight *= _box_factor(lam, widths[k])
    val = np.conj(f.coeffs) @ weight @ f.coeffs
    return float(val.real)


def _norm_sq_box_dense(tensor: np.ndarray, strides: np.ndarray, widths: np.ndarray) -> float:
    n = tensor.ndim
    if n == 1:
        s = tensor.shape[0]
        nfft = 1
        while nfft < 2 * s:
            nfft *= 2
        spec = np.fft.fft(tensor, nfft)
        corr = np.fft.ifft(spec * np.conj(spec))
        # corr[k] = sum_a c_{a+k} conj(c_a), k = 0..s-1 then negative lags wrap
        lags = np.concatenate([np.arange(s), np.arange(-(s - 1), 0)])
        kern = _box_factor(lags * strides[0], widths[0])
        idx = np.concatenate([np.arange(s), nfft - np.arange(s - 1, 0, -1)])
        return float(np.real(np.sum(corr[idx] * kern)))
    out = tensor
    for axis in range(n):
        s = tensor.shape[axis]
        lag = (np.arange(s)[:, None] - np.arange(s)[None, :]) * strides[axis]
        T = _box_factor(lag, widths[axis])
        if np.isrealobj(out):
            out = np.tensordot(T, out, axes=([1], [axis]))
        else:
            out = np.tensordot(T, out, axes=([1], [axis]))
        out = np.moveaxis(out, 0, axis)
    return float(np.real(np.sum(np.conj(tensor) * out)))


def _norm_sq_box(f: TrigPolynomial, widths: np.ndarray) -> float:
    if not f.nterms:
        return 0.0
    if f.nterms <= _PAIRWISE_MAX_TERMS and f.nterms ** 2 * f.dim <= 4_000_000:
        return _norm_sq_box_pairwise(f, widths)
    dense = _densify(f)
    if dense is None:
        raise ValueError("polynomial support too large/unstructured for the box integral")
    return _norm_sq_box_dense(dense[0], dense[1], widths)


def _gl_nodes(m: int):
    return np.polynomial.legendre.leggauss(m)


def _ball_slice_norm(tensor: np.ndarray, strides: np.ndarray, radius: float,
                     rel_tol: float, depth: int) -> float:
    """integral over the dim(tensor)-ball of |f|^2 for the dense tensor form.

    Outer axis is handled with Gauss-Legendre panels under the substitution
    x_1 = R sin t (regularizes the sqrt endpoint), inner integrals recurse
    until the exact 1-D closed form takes over.
    """
    n = tensor.ndim
    if n == 1:
        s = tensor.shape[0]
        lags = np.arange(-(s - 1), s)
        kern = _box_factor(lags * strides[0], radius)
        if s <= 600:
            c = tensor.astype(np.complex128)
            corr = np.correlate(c, c, mode="full")  # sum_a c_{a+k} conj(c_a)
            return float(np.real(np.sum(corr * kern)))
        nfft = 1
        while nfft < 2 * s:
            nfft *= 2
        spec = np.fft.fft(tensor, nfft)
        corr = np.fft.ifft(spec * np.conj(spec))
        idx = np.concatenate([nfft - np.arange(s - 1, 0, -1), np.arange(s)])
        return float(np.real(np.sum(corr[np.mod(idx, nfft)] * kern)))

    def panel(m: int) -> float:
        t, w = _gl_nodes(m)
        t = t * (math.pi / 2.0)
        w = w * (math.pi / 2.0)
        x1 = radius * np.sin(t)
        jac = radius * np.cos(t)
        # collapse the first axis at each node
        s1 = tensor.shape[0]
        ax = (np.arange(s1) * strides[0])
        E = np.exp(2j * math.pi * np.outer(x1, ax))
        flat = tensor.reshape(s1, -1)
        coll = E @ flat  # (m, rest)
        total = 0.0
        rest_shape = tensor.shape[1:]
        for i in range(m):
            sub = coll[i].reshape(rest_shape)
            r2 = math.sqrt(max(radius ** 2 - x1[i] ** 2, 0.0))
            if r2 == 0.0:
                continue
            if n - 1 == 1:
                val = _ball_slice_norm(sub, strides[1:], r2, rel_tol, depth)
            else:
                val = _ball_slice_norm(sub, strides[1:], r2, rel_tol, depth + 1)
            total += w[i] * jac[i] * val
        return total

    m = 24 if depth else 32
    prev = panel(m)
    for _ in range(7):
        m *= 2
        cur = panel(m)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300) or m >= 4096:
            return cur
        prev = cur
    return prev


def _norm_sq_ball_dense_2d(tensor: np.ndarray, strides: np.ndarray, radius: float,
                           rel_tol: float) -> float:
    """Vectorized disk integral: collapse axis 1 on all outer nodes at once,
    then per-node FFT autocorrelation against the exact slice kernel."""
    s1, s2 = tensor.shape

    def panel(m: int) -> float:
        t, w = _gl_nodes(m)
        t = t * (math.pi / 2.0)
        w = w * (math.pi / 2.0)
        x1 = radius * np.sin(t)
        jac = radius * np.cos(t)
        ax = np.arange(s1) * strides[0]
        E = np.exp(2j * math.pi * np.outer(x1, ax))
        D = E @ tensor  # (m, s2)
        nfft = 1
        while nfft < 2 * s2:
            nfft *= 2
        spec = np.fft.fft(D, nfft, axis=1)
        corr = np.fft.ifft(spec * np.conj(spec), axis=1)
        idx = np.concatenate([nfft - np.arange(s2 - 1, 0, -1), np.arange(s2)])
        R = corr[:, np.mod(idx, nfft)]  # lags -(s2-1)..(s2-1)
        lags = np.arange(-(s2 - 1), s2) * strides[1]
        w2 = np.sqrt(np.maximum(radius ** 2 - x1 ** 2, 0.0))
        kern = np.empty((m, len(lags)))
        zero = (lags == 0)
        kern[:, zero] = 2.0 * w2[:, None]
        nz = ~zero
        kern[:, nz] = np.sin(TWO_PI * np.outer(w2, lags[nz])) / (math.pi * lags[nz])[None, :]
        vals = np.sum(np.real(R) * kern, axis=1)
        return float(np.sum(w * jac * vals))

    m = 64
    prev = panel(m)
    for _ in range(7):
        m *= 2
        cur = panel(m)
        if abs(cur - prev) <= rel_tol * max(abs(cur), 1e-300) or m >= 8192:
            return cur
        prev = cur
    return prev


def norm_sq_domain(f: TrigPolynomial, domain: Domain, rel_tol: float = 1e-9) -> float:
    """integral over D of |f|^2.

    Boxes use the closed form sum_{nu,mu} c_nu conj(c_mu) prod_i
    sin(2 pi lam_i d_i)/(pi lam_i); balls use adaptive Gauss-Legendre
    panels on the outer axes around an exact innermost slice integral.
    """
    if f.dim != domain.dim:
        raise ValueError("polynomial and domain dimensions differ")
    _require_inside_cell(domain)
    if not f.nterms:
        return 0.0
    widths = domain.box_halfwidths()
    if widths is not None:
        return _norm_sq_box(f, widths)
    if domain.kind == "ball":
        if domain.dim == 1:
            return _norm_sq_box(f, np.array([domain.delta]))
        dense = _densify(f)
        if dense is None:
            raise ValueError("polynomial support too large/unstructured for the ball integral")
        tensor, strides = dense
        if domain.dim == 2:
            return _norm_sq_ball_dense_2d(tensor, strides, domain.delta, rel_tol)
        if domain.dim == 3:
            return _ball_slice_norm(tensor.astype(np.complex128), strides,
                                    domain.delta, rel_tol, 0)
        raise ValueError("ball integrals implemented for dim <= 3")
    raise ValueError("unsupported domain shape for norm_sq_domain")


def rayleigh_quotient(f: TrigPolynomial, domain: Domain, rel_tol: float = 1e-9) -> float:
    """norm_sq_torus(f) / (|D|^{-1} norm_sq_domain(f, D))."""
    den = norm_sq_domain(f, domain, rel_tol)
    if den <= 0.0 or not math.isfinite(den):
        raise ZeroDivisionError("restricted norm vanished; Rayleigh quotient undefined")
    return norm_sq_torus(f) * domain.volume() / den


def multiply(f: TrigPolynomial, g: TrigPolynomial) -> TrigPolynomial:
    """Pointwise product via coefficient convolution.

    Products of positive definite inputs keep exactly nonnegative
    coefficients (sums of products of nonnegative reals), so the result
    carries the mark without any tolerance.
    """
    if f.dim != g.dim:
        raise ValueError("dimension mismatch in multiply")
    real = f.is_real and g.is_real
    pos = f.is_pos_def and g.is_pos_def
    if not f.nterms or not g.nterms:
        return TrigPolynomial(f.dim, np.zeros((0, f.dim), np.int64), [],
                              is_real=real, is_pos_def=pos)
    if f.nterms * g.nterms <= 4_000_000:
        sf = f.freqs[:, None, :] + g.freqs[None, :, :]
        cf = np.outer(f.coeffs, g.coeffs)
        return TrigPolynomial(f.dim, sf.reshape(-1, f.dim), cf.ravel(),
                              is_real=real, is_pos_def=pos)
    if f.dim == 1:
        df, dg = _densify(f), _densify(g)
        if df is not None and dg is not None and df[1][0] == dg[1][0]:
            stride = int(df[1][0])
            lo = int(f.freqs[:, 0].min()) + int(g.freqs[:, 0].min())
            conv = np.convolve(df[0].astype(np.complex128), dg[0].astype(np.complex128))
            freqs = lo + stride * np.arange(len(conv), dtype=np.int64)
            return TrigPolynomial(1, freqs.reshape(-1, 1), conv,
                                  is_real=real, is_pos_def=pos)
    raise ValueError("product support too large for the direct convolution path")


def random_pd_poly(seed: int, dim: int, degree: int, decay: float = 1.5) -> TrigPolynomial:
    """Seeded random positive definite polynomial.

    Coefficients are u_nu (1 + |nu|)^(-decay) with u_nu uniform on [0, 1],
    drawn once per frequency in the lexicographic half-space (first
    nonzero coordinate positive) and mirrored, so the result is even,
    real-valued and positive definite by construction.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    rng = np.random.default_rng(seed)
    axes = [np.arange(-degree, degree + 1)] * dim
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, dim)
    # keep zero and the lexicographic-positive half
    keep = np.zeros(len(grid), dtype=bool)
    undecided = np.ones(len(grid), dtype=bool)
    for k in range(dim):
        col = grid[:, k]
        keep |= undecided & (col > 0)
        undecided &= (col == 0)
    half = grid[keep]
    order = _lex_order(half)
    half = half[order]
    u = rng.uniform(0.0, 1.0, size=len(half) + 1)
    mag = np.linalg.norm(half.astype(np.float64), axis=1)
    amp = u[1:] * (1.0 + mag) ** (-decay)
    freqs = np.concatenate([np.zeros((1, dim), np.int64), half, -half])
    coeffs = np.concatenate([[u[0]], amp, amp])
    return TrigPolynomial(dim, freqs, coeffs, is_real=True, is_pos_def=True)
