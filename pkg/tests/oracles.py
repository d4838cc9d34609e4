"""Independent test-side oracles.

These deliberately avoid the library's straightening and projection code:
elements act on explicit lowest-/highest-weight module bases generator by
generator, weight spaces are enumerated by a different algorithm, and
polynomials are recovered by Lagrange interpolation.
"""

from fractions import Fraction

from admz.usl2 import _LETTERS, FinElement


def act_word_lowest_weight(word, mu, start=0):
    """Act a generator word on the basis {e^j w} of a lowest-weight module.

    w satisfies f.w = 0, h.w = mu*w; the standard relations give
    h.e^j w = (mu+2j) e^j w and f.e^j w = -j(mu+j-1) e^{j-1} w.
    Returns a dict j -> coefficient.
    """
    mu = Fraction(mu)
    vec = {start: Fraction(1)}
    for g in reversed(list(word)):
        nxt = {}
        for j, c in vec.items():
            if g == "e":
                nxt[j + 1] = nxt.get(j + 1, Fraction(0)) + c
            elif g == "h":
                nxt[j] = nxt.get(j, Fraction(0)) + c * (mu + 2 * j)
            elif g == "f":
                if j > 0:
                    coeff = c * Fraction(-j) * (mu + j - 1)
                    nxt[j - 1] = nxt.get(j - 1, Fraction(0)) + coeff
            else:
                raise ValueError(g)
        vec = {j: c for j, c in nxt.items() if c}
    return vec


def act_word_highest_weight(word, mu, start=0):
    """Mirror oracle on the basis {f^j v} of a highest-weight module:
    e.v = 0, h.v = mu*v, e.f^j v = j(mu-j+1) f^{j-1} v."""
    mu = Fraction(mu)
    vec = {start: Fraction(1)}
    for g in reversed(list(word)):
        nxt = {}
        for j, c in vec.items():
            if g == "f":
                nxt[j + 1] = nxt.get(j + 1, Fraction(0)) + c
            elif g == "h":
                nxt[j] = nxt.get(j, Fraction(0)) + c * (mu - 2 * j)
            elif g == "e":
                if j > 0:
                    coeff = c * Fraction(j) * (mu - j + 1)
                    nxt[j - 1] = nxt.get(j - 1, Fraction(0)) + coeff
            else:
                raise ValueError(g)
        vec = {j: c for j, c in nxt.items() if c}
    return vec


def _element_words(x: FinElement):
    letters = _LETTERS[x.order]
    for mono, coeff in x.terms.items():
        word = []
        for g, exp in zip(letters, mono):
            word.extend([g] * exp)
        yield word, coeff


def eval_mod_n_minus(x: FinElement, mu) -> Fraction:
    """Lowest-weight evaluation of the mod-U(g)n_- projection at h = mu."""
    total = Fraction(0)
    for word, coeff in _element_words(x):
        total += coeff * act_word_lowest_weight(word, mu).get(0, Fraction(0))
    return total


def eval_mod_n_plus(x: FinElement, mu) -> Fraction:
    """Highest-weight evaluation of the mod-U(g)n_+ projection at h = mu."""
    total = Fraction(0)
    for word, coeff in _element_words(x):
        total += coeff * act_word_highest_weight(word, mu).get(0, Fraction(0))
    return total


def brute_weight_space(delta_deg: int, alpha_wt: int):
    """Exhaustive weight-space enumeration by per-mode multiplicity choice."""
    charge = {0: -1, 1: 0, 2: 1}
    modes = [(d, r) for d in range(-delta_deg, 0) for r in (0, 1, 2)]
    found = []

    def rec(idx, remaining, ch, acc):
        if remaining == 0:
            if ch == alpha_wt:
                found.append(tuple(sorted(acc)))
            return
        if idx == len(modes):
            return
        d, r = modes[idx]
        cost = -d
        count = 0
        while count * cost <= remaining:
            rec(idx + 1, remaining - count * cost, ch + count * charge[r], acc + [(d, r)] * count)
            count += 1

    if delta_deg == 0:
        return [()] if alpha_wt == 0 else []
    rec(0, delta_deg, 0, [])
    return sorted(found)


def lagrange_fit(points):
    """Exact Lagrange interpolation; returns a callable evaluator."""
    points = [(Fraction(x), Fraction(y)) for x, y in points]

    def evaluate(x):
        x = Fraction(x)
        total = Fraction(0)
        for i, (xi, yi) in enumerate(points):
            term = yi
            for j, (xj, _) in enumerate(points):
                if i != j:
                    term *= (x - xj) / (xi - xj)
            total += term
        return total

    return evaluate
