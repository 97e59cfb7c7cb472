"""Ring-expression DSL: parsing, validation and canonical rendering.

Grammar (whitespace insignificant):

    ring    := product
    product := atom { ("x" | "*") atom }
    atom    := base [ "[x]/(" poly ")" ] | "(" ring ")"
    base    := "Z" integer | "GF(" integer ")"
    poly    := term { "+" term }
    term    := [integer] ["x" ["^" integer]]

"x" doubles as the product separator and the polynomial indeterminate:
inside the parentheses following "[x]/" it is the indeterminate, anywhere
else at expression level it is the product operator.

Expressions evaluate to finite commutative rings with unity: "Z4" (integers
mod 4), "GF(9)" (the 9-element field), "Z4[x]/(x^2+x+1)" (quotient of a
polynomial ring by a monic modulus), "Z4 x Z4" (direct product).  The GF
argument must be a prime power; polynomial coefficients are reduced modulo
the characteristic of the base ring at construction time, and the reduced
modulus must stay monic of degree >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass


class ExprError(ValueError):
    """Base class for ring-expression errors."""


class ParseError(ExprError):
    """Grammar violation; carries the character offset and what was expected."""

    def __init__(self, message: str, position: int, expected: str | None = None):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = expected


class SemanticError(ExprError):
    """Grammatically valid input that does not denote a ring construction."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Zn:
    """Integers modulo n, n >= 2."""

    n: int


@dataclass(frozen=True)
class GF:
    """The Galois field with p**k elements."""

    p: int
    k: int = 1


@dataclass(frozen=True)
class Polynomial:
    """Modulus polynomial; coeffs[i] is the coefficient of x**i.

    Coefficients are already reduced modulo the base-ring characteristic,
    trailing zeros are stripped, and the leading coefficient is 1.
    """

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class Quotient:
    """base[x]/(modulus) with base restricted to Zn or GF."""

    base: Zn | GF
    modulus: Polynomial


@dataclass(frozen=True)
class Product:
    """Direct product of >= 2 factors; parsing always produces a flat factor list."""

    factors: tuple[RingExpr, ...]


RingExpr = Zn | GF | Quotient | Product


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k and p prime, or None."""
    if q < 2:
        return None
    p = 2
    while p * p <= q:
        if q % p == 0:
            k, rest = 0, q
            while rest % p == 0:
                rest //= p
                k += 1
            return (p, k) if rest == 1 else None
        p += 1
    return (q, 1)  # q itself is prime


def characteristic_of_base(base: Zn | GF) -> int:
    return base.n if isinstance(base, Zn) else base.p


def expr_order(expr: RingExpr) -> int:
    """Number of elements of the ring the expression denotes."""
    if isinstance(expr, Zn):
        return expr.n
    if isinstance(expr, GF):
        return expr.p**expr.k
    if isinstance(expr, Quotient):
        return expr_order(expr.base) ** expr.modulus.degree
    result = 1
    for factor in expr.factors:
        result *= expr_order(factor)
    return result


# --- tokenizer -------------------------------------------------------------

_PUNCT = set("()[]/+^*")


def _tokenize(text: str) -> list[tuple[str, str | int, int]]:
    """Split into (kind, value, offset) triples; kinds are GF, Z, x, INT,
    the punctuation characters themselves, and a final EOF."""
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("GF", i):
            tokens.append(("GF", "GF", i))
            i += 2
        elif ch == "Z":
            tokens.append(("Z", "Z", i))
            i += 1
        elif ch == "x":
            tokens.append(("x", "x", i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i))
            i = j
        elif ch in _PUNCT:
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("EOF", "", n))
    return tokens


# --- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> str:
        return self.tokens[self.pos][0]

    def here(self) -> int:
        return self.tokens[self.pos][2]

    def advance(self) -> tuple[str, str | int, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> tuple[str, str | int, int]:
        if self.peek() != kind:
            what = what or repr(kind)
            raise ParseError(
                f"expected {what}, found {self._describe()}", self.here(), expected=kind
            )
        return self.advance()

    def _describe(self) -> str:
        kind, value, _ = self.tokens[self.pos]
        return "end of input" if kind == "EOF" else repr(str(value))

    def parse_ring(self) -> RingExpr:
        expr = self.parse_product()
        if self.peek() != "EOF":
            raise ParseError(
                f"unexpected trailing input {self._describe()}", self.here()
            )
        return expr

    def parse_product(self) -> RingExpr:
        factors = [self.parse_atom()]
        while self.peek() in ("x", "*"):
            self.advance()
            factors.append(self.parse_atom())
        if len(factors) == 1:
            return factors[0]
        flat: list[RingExpr] = []
        for f in factors:
            flat.extend(f.factors) if isinstance(f, Product) else flat.append(f)
        return Product(tuple(flat))

    def parse_atom(self) -> RingExpr:
        if self.peek() == "(":
            self.advance()
            inner = self.parse_product()
            self.expect(")")
            if self.peek() == "[":
                raise SemanticError(
                    "quotient base must be Zn or GF(q), not a parenthesized expression",
                    self.here(),
                )
            return inner
        base = self.parse_base()
        if self.peek() != "[":
            return base
        self.advance()
        self.expect("x", "'x' (the indeterminate)")
        self.expect("]")
        self.expect("/")
        self.expect("(")
        modulus = self.parse_poly(characteristic_of_base(base))
        self.expect(")")
        return Quotient(base, modulus)

    def parse_base(self) -> Zn | GF:
        kind = self.peek()
        if kind == "Z":
            self.advance()
            _, n, npos = self.expect("INT", "integer after 'Z'")
            if n < 2:
                raise SemanticError(f"Z{n} is not a ring with unity (need n >= 2)", npos)
            return Zn(n)
        if kind == "GF":
            self.advance()
            self.expect("(")
            _, q, qpos = self.expect("INT", "integer GF argument")
            self.expect(")")
            pk = prime_power(q)
            if pk is None:
                raise SemanticError(f"GF({q}): {q} is not a prime power", qpos)
            return GF(*pk)
        raise ParseError(
            f"expected 'Z', 'GF' or '(', found {self._describe()}", self.here()
        )

    def parse_poly(self, char: int) -> Polynomial:
        start = self.here()
        coeffs: dict[int, int] = {}
        while True:
            coeff, exp = self.parse_term()
            coeffs[exp] = coeffs.get(exp, 0) + coeff
            if self.peek() != "+":
                break
            self.advance()
        reduced = [coeffs.get(i, 0) % char for i in range(max(coeffs) + 1)]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        if len(reduced) < 2:
            raise SemanticError(
                "modulus must have degree >= 1 after coefficient reduction", start
            )
        if reduced[-1] != 1:
            raise SemanticError(
                "modulus must be monic after coefficient reduction", start
            )
        return Polynomial(tuple(reduced))

    def parse_term(self) -> tuple[int, int]:
        coeff = 1
        saw_any = False
        if self.peek() == "INT":
            _, coeff, _ = self.advance()
            saw_any = True
        if self.peek() == "x":
            self.advance()
            saw_any = True
            exp = 1
            if self.peek() == "^":
                self.advance()
                _, exp, _ = self.expect("INT", "integer exponent")
        else:
            exp = 0
        if not saw_any:
            raise ParseError(
                f"expected polynomial term, found {self._describe()}", self.here()
            )
        return coeff, exp


def parse(text: str) -> RingExpr:
    """Parse a ring expression; raises ParseError or SemanticError."""
    if not text or not text.strip():
        raise ParseError("empty ring expression", 0)
    return _Parser(text).parse_ring()


def render(expr: RingExpr) -> str:
    """Canonical text form; parse(render(e)) == e for all parser-produced e."""
    if isinstance(expr, Zn):
        return f"Z{expr.n}"
    if isinstance(expr, GF):
        return f"GF({expr.p**expr.k})"
    if isinstance(expr, Quotient):
        return f"{render(expr.base)}[x]/({poly_text(expr.modulus)})"
    return " x ".join(render(f) for f in expr.factors)


def poly_text(poly: Polynomial) -> str:
    """Render with descending powers, e.g. "x^2+x+1"."""
    terms = []
    for i in range(poly.degree, -1, -1):
        c = poly.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            xpart = "x" if i == 1 else f"x^{i}"
            terms.append(xpart if c == 1 else f"{c}{xpart}")
    return "+".join(terms)
