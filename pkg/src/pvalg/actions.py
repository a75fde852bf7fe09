"""Polynomial actions of ``G_m^r x G_a^s`` on affine ``n``-space.

An action is ``n`` polynomials in ``l1..lr, a1..as, x1..xn``. The group law is
fixed as ``(l, a) * (m, b) = (l*m, a + b)``; whether the components respect it
is checked, never assumed.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from .core import linalg
from .core.config import DEFAULT_CONFIG, RunConfig
from .core.errors import DimensionMismatchError, ParameterError, VariableMismatchError
from .core.linalg import Vector
from .core.rationals import as_fraction, format_rational
from .models import ActionModel, ActionReportModel
from .polyring import Polynomial
from .presentations import parse_polynomial


def action_variables(r: int, s: int, n: int) -> Tuple[str, ...]:
    """Variable names ``l1..lr, a1..as, x1..xn`` in that order."""
    return tuple(f"l{i + 1}" for i in range(r)) + tuple(f"a{j + 1}" for j in range(s)) + tuple(f"x{k + 1}" for k in range(n))


@dataclass(frozen=True)
class PolynomialAction:
    """``x -> (f_1(l, a, x), ..., f_n(l, a, x))``."""

    name: str
    r: int
    s: int
    n: int
    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        """Move every component onto the full variable tuple."""
        if len(self.components) != self.n:
            raise DimensionMismatchError(f"{len(self.components)} components for a space of dimension {self.n}")
        variables = action_variables(self.r, self.s, self.n)
        try:
            components = tuple(c.embed(variables) for c in self.components)
        except VariableMismatchError as exc:
            raise VariableMismatchError(f"action '{self.name}': {exc}") from exc
        object.__setattr__(self, "components", components)

    @property
    def variables(self) -> Tuple[str, ...]:
        """All variables: torus, additive, then space."""
        return action_variables(self.r, self.s, self.n)

    @property
    def torus_params(self) -> Tuple[str, ...]:
        """The ``G_m`` parameters."""
        return self.variables[: self.r]

    @property
    def additive_params(self) -> Tuple[str, ...]:
        """The ``G_a`` parameters."""
        return self.variables[self.r : self.r + self.s]

    @property
    def params(self) -> Tuple[str, ...]:
        """Group parameters."""
        return self.variables[: self.r + self.s]

    @property
    def space(self) -> Tuple[str, ...]:
        """Coordinates of the space acted on."""
        return self.variables[self.r + self.s :]

    @property
    def parameter_count(self) -> int:
        """Dimension of the acting group."""
        return self.r + self.s

    def identity_values(self) -> Dict[str, Fraction]:
        """Parameter values of the group identity."""
        values = {name: Fraction(1) for name in self.torus_params}
        values.update({name: Fraction(0) for name in self.additive_params})
        return values


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def verify_action(act: PolynomialAction) -> bool:
    """Check ``act(e, x) = x`` and ``act(g, act(h, x)) = act(g*h, x)`` symbolically."""
    variables = act.variables
    identity = act.identity_values()
    for name, comp in zip(act.space, act.components):
        if comp.substitute(identity, variables=variables, partial=True) != Polynomial.gen(variables, name):
            logger.debug(f"verify_action: {act.name} moves {name} at the identity")
            return False

    second = {name: "m" + name[1:] for name in act.torus_params}
    second.update({name: "b" + name[1:] for name in act.additive_params})
    doubled = act.params + tuple(second[p] for p in act.params) + act.space
    inner = {x: comp.rename(second).embed(doubled) for x, comp in zip(act.space, act.components)}
    product = {}
    for name in act.torus_params:
        product[name] = Polynomial.gen(doubled, name) * Polynomial.gen(doubled, second[name])
    for name in act.additive_params:
        product[name] = Polynomial.gen(doubled, name) + Polynomial.gen(doubled, second[name])
    for x, comp in zip(act.space, act.components):
        composed = comp.embed(doubled).substitute(inner, variables=doubled, partial=True)
        expected = comp.substitute(product, variables=doubled, partial=True)
        if composed != expected:
            logger.debug(f"verify_action: {act.name} breaks the group law in {x}")
            return False
    return True


def is_linear(act: PolynomialAction) -> bool:
    """True iff every component is homogeneous of degree 1 in the space variables."""
    return all(sum(mono) == 1 for comp in act.components for mono in comp.coefficients_in(act.space))


def has_fixed_point(act: PolynomialAction) -> Optional[bool]:
    """Decide whether some rational point is fixed by the whole group.

    ``act(g, x) - x`` vanishes for all ``g`` iff every parameter-monomial
    coefficient vanishes at ``x``. Only systems of degree at most 1 in ``x``
    are decided; otherwise ``None``.
    """
    n = act.n
    rows: List[Vector] = []
    rhs: List[Fraction] = []
    for name, comp in zip(act.space, act.components):
        delta = comp - Polynomial.gen(act.variables, name)
        for coeff in delta.coefficients_in(act.params).values():
            if coeff.total_degree() > 1:
                return None
            rows.append(tuple(coeff.coefficient(tuple(int(j == k) for j in range(n))) for k in range(n)))
            rhs.append(-coeff.constant_term())
    if not rows:
        return True
    return linalg.LinearSystem(tuple(rows)).solve(rhs) is not None


def orbit_rank(act: PolynomialAction, v: Sequence) -> int:
    """Rank of the Jacobian in the parameters at the identity and the point ``v``."""
    point = linalg.vector(v)
    if len(point) != act.n:
        raise DimensionMismatchError(f"point has {len(point)} coordinates, expected {act.n}")
    values = act.identity_values()
    values.update(dict(zip(act.space, point)))
    if not act.params:
        return 0
    jacobian = tuple(tuple(comp.diff(p).evaluate(values) for p in act.params) for comp in act.components)
    return linalg.rank(jacobian)


def apply(act: PolynomialAction, torus: Sequence, additive: Sequence, point: Sequence) -> Vector:
    """Evaluate ``act((torus, additive), point)``."""
    if len(torus) != act.r or len(additive) != act.s or len(point) != act.n:
        raise DimensionMismatchError(f"expected {act.r} torus, {act.s} additive and {act.n} point coordinates")
    torus = [as_fraction(t) for t in torus]
    if any(t == 0 for t in torus):
        raise ParameterError("torus parameters must be non-zero")
    values = dict(zip(act.variables, list(torus) + [as_fraction(a) for a in additive] + [as_fraction(x) for x in point]))
    return tuple(comp.evaluate(values) for comp in act.components)


# ---------------------------------------------------------------------------
# Built-in actions
# ---------------------------------------------------------------------------


def translations(n: int) -> PolynomialAction:
    """``G_a^n`` acting on ``A^n`` by translation."""
    variables = action_variables(0, n, n)
    g = dict(zip(variables, Polynomial.gens(variables)))
    return PolynomialAction(f"translations(n={n})", 0, n, n, tuple(g[f"x{i}"] + g[f"a{i}"] for i in range(1, n + 1)))


def hirzebruch(d: int) -> PolynomialAction:
    """The ``G_m^2 x G_a^2`` action on ``A^4`` extending to the Hirzebruch surface ``F_d``."""
    variables = action_variables(2, 2, 4)
    l1, l2, a1, a2, x1, x2, x3, x4 = Polynomial.gens(variables)
    components = (
        l1 * x1,
        l2 * x2,
        l1 * x3 + l1 * a1 * x1,
        l1**d * l2 * x4 + l1**d * l2 * a2 * x1**d * x2,
    )
    return PolynomialAction(f"hirzebruch(d={d})", 2, 2, 4, components)


def polex(n: int) -> PolynomialAction:
    """``[[l E, l A], [0, l E]]`` on ``K^(2n)`` with ``A`` an arbitrary ``n x n`` block."""
    variables = action_variables(1, n * n, 2 * n)
    g = dict(zip(variables, Polynomial.gens(variables)))
    lam = g["l1"]
    components = []
    for i in range(n):
        comp = lam * g[f"x{i + 1}"]
        for j in range(n):
            comp = comp + lam * g[f"a{i * n + j + 1}"] * g[f"x{n + j + 1}"]
        components.append(comp)
    components.extend(lam * g[f"x{n + i + 1}"] for i in range(n))
    return PolynomialAction(f"polex(n={n})", 1, n * n, 2 * n, tuple(components))


def scalar(n: int) -> PolynomialAction:
    """Scalar multiplication by ``G_m`` on ``A^n``."""
    variables = action_variables(1, 0, n)
    g = dict(zip(variables, Polynomial.gens(variables)))
    return PolynomialAction(f"scalar(n={n})", 1, 0, n, tuple(g["l1"] * g[f"x{i + 1}"] for i in range(n)))


def table_rep(k: int, config: RunConfig = DEFAULT_CONFIG) -> PolynomialAction:
    """The linear action of ``G(A)`` on ``A`` for table entry ``k``."""
    from .algebras.finite import from_quotient
    from .hassett import matrix_rep
    from .presentations import table_entry

    rep = matrix_rep(from_quotient(table_entry(k).presentation), config=config)
    r, s = len(rep.torus_params), len(rep.additive_params)
    variables = action_variables(r, s, rep.n)
    xs = [Polynomial.gen(variables, f"x{j + 1}") for j in range(rep.n)]
    components = []
    for row in rep.entries:
        comp = Polynomial.zero(variables)
        for entry, x in zip(row, xs):
            if entry:
                comp = comp + entry.embed(variables) * x
        components.append(comp)
    return PolynomialAction(f"table_rep(k={k})", r, s, rep.n, tuple(components))


@dataclass(frozen=True)
class _Builtin:
    factory: Callable[..., PolynomialAction]
    param: str
    minimum: int


BUILTINS: Dict[str, _Builtin] = {
    "translations": _Builtin(translations, "n", 1),
    "hirzebruch": _Builtin(hirzebruch, "d", 0),
    "polex": _Builtin(polex, "n", 1),
    "scalar": _Builtin(scalar, "n", 1),
    "table_rep": _Builtin(table_rep, "k", 1),
}


def builtin(name: str, params: Mapping[str, int]) -> PolynomialAction:
    """Construct a named action.

    Raises:
        ParameterError: unknown name, unknown or missing parameter, or a value out of range.

    """
    spec = BUILTINS.get(name)
    if spec is None:
        raise ParameterError(f"unknown action '{name}' (choose from {', '.join(sorted(BUILTINS))})")
    extra = sorted(set(params) - {spec.param})
    if extra:
        raise ParameterError(f"action '{name}' takes only '{spec.param}', got {', '.join(extra)}")
    if spec.param not in params:
        raise ParameterError(f"action '{name}' needs parameter '{spec.param}'")
    value = params[spec.param]
    if isinstance(value, bool) or not isinstance(value, int) or value < spec.minimum:
        raise ParameterError(f"parameter '{spec.param}' must be an integer >= {spec.minimum}, got {value!r}")
    return spec.factory(value)


# ---------------------------------------------------------------------------
# Reports and serialization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ActionReport:
    """Outcome of :func:`analyze_action`."""

    name: str
    axioms_ok: bool
    linear: bool
    has_fixed_point: Optional[bool]  # None: undecided
    orbit_rank_at_witness: int
    witness: Vector
    parameter_count: int
    n: int
    params: Dict[str, int] = field(default_factory=dict)

    def to_model(self) -> ActionReportModel:
        """Serializable form with rationals as strings."""
        return ActionReportModel(
            name=self.name,
            params=dict(self.params),
            axioms_ok=self.axioms_ok,
            linear=self.linear,
            has_fixed_point=self.has_fixed_point,
            orbit_rank_at_witness=self.orbit_rank_at_witness,
            parameter_count=self.parameter_count,
            n=self.n,
            witness=[format_rational(x) for x in self.witness],
        )


def _witnesses(act: PolynomialAction, config: RunConfig):
    """Seeded points with non-zero integer coordinates in ``[-point_bound, point_bound]``."""
    rng = config.rng()
    for _ in range(config.retries):
        magnitudes = rng.integers(1, config.point_bound + 1, size=act.n)
        signs = rng.choice([-1, 1], size=act.n)
        yield tuple(Fraction(int(m) * int(s)) for m, s in zip(magnitudes, signs))


def analyze_action(act: PolynomialAction, config: RunConfig = DEFAULT_CONFIG, params: Optional[Mapping[str, int]] = None) -> ActionReport:
    """Run every check; the orbit rank is the best over the seeded witnesses."""
    best_rank, witness = -1, tuple(Fraction(0) for _ in range(act.n))
    bound = min(act.parameter_count, act.n)
    for point in _witnesses(act, config):
        rank = orbit_rank(act, point)
        if rank > best_rank:
            best_rank, witness = rank, point
        if rank == bound:
            break
    logger.debug(f"analyze_action: {act.name} orbit rank {best_rank} at {[format_rational(x) for x in witness]}")
    return ActionReport(
        name=act.name,
        axioms_ok=verify_action(act),
        linear=is_linear(act),
        has_fixed_point=has_fixed_point(act),
        orbit_rank_at_witness=best_rank,
        witness=witness,
        parameter_count=act.parameter_count,
        n=act.n,
        params=dict(params or {}),
    )


def action_to_model(act: PolynomialAction) -> ActionModel:
    """Serialize an action to its JSON schema."""
    return ActionModel(r=act.r, s=act.s, n=act.n, components=[c.to_text() for c in act.components], name=act.name)


def action_from_model(model: ActionModel) -> PolynomialAction:
    """Parse components back over the standard variable names."""
    variables = action_variables(model.r, model.s, model.n)
    components = tuple(parse_polynomial(text, variables) for text in model.components)
    return PolynomialAction(model.name or "custom", model.r, model.s, model.n, components)
