"""Two engines for HOMFLYPT-derived invariants of braid closures.

``homfly_oracle`` is the ground truth: an exact skein recursion on braid
words. It walks the closure from a fixed basepoint scheme, switches the
first crossing that is not descending, and smooths it, terminating because
(letter count, bad-crossing count) drops lexicographically at every step.
Descending diagrams are unlinks, whose polynomial is a power of
delta = (v^-1 - v)/z. The cost is exponential, so calls are budgeted.

``gamma_positive`` is the fast engine for positive braid words. It computes
the zeroth coefficient polynomial directly in Z[a^{+-1}] by peeling split
factors and connected summands off the word, and otherwise rewriting the
word (cyclic shifts, commutations, braid relations) until some generator
appears twice in a row; the resulting skein triple of positive braid links
drops the letter count on both branches.

The zeroth coefficient polynomial of a link L is the z-degree-0 layer of
(z/v)^{|L|-1} * P_L(v, z) with a = -v^2 substituted. For an n-component
unlink it is (-1)^{n-1} (1 + a^-1)^{n-1}, and across a split union or
connected sum it is multiplicative up to the (-(1 + a^-1)) split factor.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .braid import BraidWord, bennequin_euler_char, closure_components
from .poly import ALPHA, BiLaurent, LaurentPoly, ONE_PLUS_INV_ALPHA, neg_alpha_pow

DEFAULT_ORACLE_BUDGET = 14
DEFAULT_SEARCH_CAP = 100_000
MEMO_CAP_ENV = "SLOPECERT_MEMO_CAP"

# delta = (v^-1 - v) / z, the unknot-disjoint-union multiplier
_DELTA = BiLaurent({(-1, -1): 1, (1, -1): -1})

# CPython dict reads/writes are atomic under the GIL, and entries are pure
# immutable values, so a lost race between threads only recomputes a result.
_oracle_memo: dict = {}
_gamma_memo: dict = {}


class OracleBudgetError(Exception):
    """The skein oracle was asked for more crossings than its budget."""


class SquareSearchError(Exception):
    """No repeated-letter rewrite was found and the oracle fallback failed."""


def clear_caches() -> None:
    _oracle_memo.clear()
    _gamma_memo.clear()


def _memo_cap() -> int:
    raw = os.environ.get(MEMO_CAP_ENV)
    if raw is None:
        return 1_000_000
    return max(0, int(raw))


def _memo_put(table: dict, key, value) -> None:
    if len(table) < _memo_cap():
        table[key] = value


@dataclass(frozen=True)
class HomflyResult:
    poly: BiLaurent
    components: int


@dataclass(frozen=True)
class GammaResult:
    gamma: LaurentPoly
    gamma_normalized: LaurentPoly
    split_components: int
    euler_char: int


# ---------------------------------------------------------------------------
# the exact oracle
# ---------------------------------------------------------------------------


def _free_cyclic_reduce(letters: tuple) -> tuple:
    """Cancel adjacent inverse pairs, including across the wrap-around."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] == -word[i + 1]:
                del word[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
        if len(word) >= 2 and word[0] == -word[-1]:
            word = word[1:-1]
            changed = True
    return tuple(word)


def _min_rotation(letters: tuple) -> tuple:
    if not letters:
        return letters
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


def _components(n: int, letters: tuple) -> int:
    return closure_components(BraidWord(n, letters))


def _first_bad_crossing(n: int, letters: tuple) -> Optional[int]:
    """Index of the first crossing whose first visit (walking the closure
    from canonical basepoints) is on the under-strand, or None if the
    diagram is descending.

    The walk starts at the top of the lowest unvisited strand position and
    follows the closure. For a positive letter the strand entering on the
    left is the over-strand.
    """
    L = len(letters)
    first_visit = [None] * L  # (traversal order, is_over)
    order = 0
    started = set()
    for start in range(n):
        if start in started:
            continue
        pos = start
        while True:
            started.add(pos)
            for j, x in enumerate(letters):
                g = abs(x)
                if pos == g - 1:
                    over = x > 0
                    if first_visit[j] is None:
                        first_visit[j] = (order, over)
                        order += 1
                    pos = g
                elif pos == g:
                    over = x < 0
                    if first_visit[j] is None:
                        first_visit[j] = (order, over)
                        order += 1
                    pos = g - 1
            if pos == start:
                break
    bad = [(o, j) for j, (o, over) in enumerate(first_visit) if not over]
    if not bad:
        return None
    return min(bad)[1]


def _oracle(n: int, letters: tuple) -> BiLaurent:
    # Free reduction only shrinks the word, so it cannot upset the
    # termination measure. Rotation is used purely as a memo key: rotating
    # the word mid-recursion could raise the bad-crossing count and loop.
    letters = _free_cyclic_reduce(letters)
    key = (n, _min_rotation(letters))
    cached = _oracle_memo.get(key)
    if cached is not None:
        return cached
    j = _first_bad_crossing(n, letters)
    if j is None:
        result = _DELTA ** (_components(n, letters) - 1)
    else:
        x = letters[j]
        switched = letters[:j] + (-x,) + letters[j + 1 :]
        smoothed = letters[:j] + letters[j + 1 :]
        p_switch = _oracle(n, switched)
        p_smooth = _oracle(n, smoothed)
        if x > 0:
            # current word is the positive side: P+ = v^2 P- + v z P0
            result = p_switch.times_monomial(2, 0) + p_smooth.times_monomial(1, 1)
        else:
            # current word is the negative side: P- = v^-2 P+ - v^-1 z P0
            result = p_switch.times_monomial(-2, 0) - p_smooth.times_monomial(-1, 1)
    _memo_put(_oracle_memo, key, result)
    return result


def homfly_oracle(w: BraidWord, budget: int = DEFAULT_ORACLE_BUDGET) -> HomflyResult:
    """Exact HOMFLYPT polynomial of the closure of ``w``.

    Raises OracleBudgetError when the word is longer than ``budget``; the
    recursion is exponential and silent truncation is never acceptable.
    """
    if len(w.letters) > budget:
        raise OracleBudgetError(
            f"oracle budget exceeded: {len(w.letters)} crossings > budget {budget}"
        )
    return HomflyResult(poly=_oracle(w.strands, w.letters), components=closure_components(w))


def zeroth_gamma(h: HomflyResult) -> LaurentPoly:
    """Extract the zeroth coefficient polynomial from an oracle result.

    Multiplies by (z/v)^{|L|-1}, takes the z^0 layer, and substitutes
    a = -v^2. Any odd v-power or odd/negative z-power at that point means
    an orientation or convention bug upstream, and is reported loudly.
    """
    k = h.components - 1
    shifted = h.poly.times_monomial(-k, k)
    terms = {}
    for (ve, ze), c in shifted.items():
        if ze < 0 or ze % 2:
            raise ValueError(f"z-exponent {ze} after normalization; convention bug")
        if ze != 0:
            continue
        if ve % 2:
            raise ValueError(f"odd v-exponent {ve} in the z^0 layer; convention bug")
        half = ve // 2
        terms[half] = terms.get(half, 0) + c * (-1 if half % 2 else 1)
    return LaurentPoly(terms)


def gamma_linking_formula(component_gammas, total_linking: int) -> LaurentPoly:
    """Zeroth coefficient polynomial of a link assembled from its
    components: (-1)^{n-1} (1+a^-1)^{n-1} (-a)^{lk} times the product of
    the component polynomials."""
    gammas = list(component_gammas)
    if not gammas:
        raise ValueError("need at least one component")
    n = len(gammas)
    if n == 1:
        # a knot has no pairwise linking; the argument is vacuous
        return gammas[0]
    acc = ONE_PLUS_INV_ALPHA ** (n - 1)
    if (n - 1) % 2:
        acc = -acc
    acc = acc * neg_alpha_pow(total_linking)
    for g in gammas:
        acc = acc * g
    return acc


# ---------------------------------------------------------------------------
# the positive-braid engine
# ---------------------------------------------------------------------------


def split_factors(w: BraidWord) -> int:
    """Number of split factors of the closure: connected components of the
    graph on strand positions joined by the generators that occur."""
    n = w.strands
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for x in w.letters:
        g = abs(x)
        a, b = find(g - 1), find(g)
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(n)})


def _comm_sort(letters: tuple) -> tuple:
    """Bubble far-apart generators (|i-j| >= 2) into ascending order."""
    word = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a - b >= 2:
                word[i], word[i + 1] = b, a
                changed = True
    return tuple(word)


def _gamma_key(n: int, letters: tuple) -> tuple:
    """Memo key: the least commutation-normalized cyclic rotation."""
    if not letters:
        return (n,)
    best = None
    for i in range(len(letters)):
        cand = _comm_sort(letters[i:] + letters[:i])
        if best is None or cand < best:
            best = cand
    return (n,) + best


def _rewrite_neighbors(word: tuple):
    """One-move rewrites preserving the closure: a cyclic shift, adjacent
    commutations, and braid-relation flips aba <-> bab for |a-b| = 1."""
    yield word[1:] + word[:1]
    L = len(word)
    for i in range(L - 1):
        a, b = word[i], word[i + 1]
        if abs(a - b) >= 2:
            yield word[:i] + (b, a) + word[i + 2 :]
    for i in range(L - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if a == c and abs(a - b) == 1:
            yield word[:i] + (b, a, b) + word[i + 3 :]


def _square_position(word: tuple) -> Optional[int]:
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return None


def _find_square(letters: tuple, cap: int) -> Optional[tuple]:
    """Search closure-preserving rewrites of ``letters`` for a word with a
    repeated adjacent letter; return that word rotated so the repeat sits
    at the front, or None if the node cap runs out first."""
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    nodes = 0
    while queue and nodes < cap:
        word = queue.popleft()
        nodes += 1
        j = _square_position(word)
        if j is not None:
            return word[j:] + word[:j]
        if word and word[-1] == word[0]:
            return word[-1:] + word[:-1]
        for nb in _rewrite_neighbors(word):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return None


def _unlink_gamma(n: int) -> LaurentPoly:
    g = ONE_PLUS_INV_ALPHA ** (n - 1)
    return -g if (n - 1) % 2 else g


def _split_word(n: int, letters: tuple, g: int, drop_single: bool):
    """Cut the word at generator g into the sub-braids on strands 1..g and
    g+1..n; with ``drop_single`` the one occurrence of g is removed."""
    left = tuple(x for x in letters if x < g)
    right = tuple(x - g for x in letters if x > g)
    if not drop_single and any(x == g for x in letters):
        raise ValueError("generator unexpectedly present")
    return (g, left), (n - g, right)


def _gamma_rec(n: int, letters: tuple, oracle_budget: int, search_cap: int) -> LaurentPoly:
    key = _gamma_key(n, letters)
    cached = _gamma_memo.get(key)
    if cached is not None:
        return cached

    if not letters:
        result = _unlink_gamma(n)
        _memo_put(_gamma_memo, key, result)
        return result

    counts = [0] * n
    for x in letters:
        counts[x] += 1

    result = None
    for g in range(1, n):
        if counts[g] == 0:
            # split union across position g
            (ln, lw), (rn, rw) = _split_word(n, letters, g, drop_single=False)
            left = _gamma_rec(ln, lw, oracle_budget, search_cap)
            right = _gamma_rec(rn, rw, oracle_budget, search_cap)
            result = -(ONE_PLUS_INV_ALPHA * left * right)
            break
    if result is None:
        for g in range(1, n):
            if counts[g] == 1:
                # single crossing between the halves: connected sum
                (ln, lw), (rn, rw) = _split_word(n, letters, g, drop_single=True)
                left = _gamma_rec(ln, lw, oracle_budget, search_cap)
                right = _gamma_rec(rn, rw, oracle_budget, search_cap)
                result = left * right
                break

    if result is None:
        found = _find_square(letters, search_cap)
        if found is not None:
            # found = (g, g, rest...); skein triple of positive words
            plus = found
            smooth = found[1:]
            minus = found[2:]
            c_plus = _components(n, plus)
            c_zero = _components(n, smooth)
            g_minus = _gamma_rec(n, minus, oracle_budget, search_cap)
            if c_zero == c_plus + 1:
                g_zero = _gamma_rec(n, smooth, oracle_budget, search_cap)
                result = -(ALPHA * (g_minus + g_zero))
            elif c_zero == c_plus - 1:
                result = -(ALPHA * g_minus)
            else:
                raise AssertionError("smoothing changed components by more than 1")

    if result is None:
        # no square within the cap; fall back to the oracle if affordable
        if len(letters) <= oracle_budget:
            result = zeroth_gamma(homfly_oracle(BraidWord(n, letters), oracle_budget))
        else:
            raise SquareSearchError(
                f"no repeated letter reachable within {search_cap} rewrites for "
                f"{BraidWord(n, letters)} and the word exceeds the oracle budget "
                f"({len(letters)} > {oracle_budget})"
            )

    _memo_put(_gamma_memo, key, result)
    return result


def gamma_positive(
    w: BraidWord,
    oracle_budget: int = DEFAULT_ORACLE_BUDGET,
    search_cap: int = DEFAULT_SEARCH_CAP,
) -> GammaResult:
    """Zeroth coefficient polynomial of a positive braid closure, with its
    normalized form.

    The normalized polynomial divides out (a+1)^{s-1} (-a)^{(2-chi-|L|)/2},
    where s counts split factors and chi comes from the fiber-surface count
    strands - letters; the division must be exact, and for positive braid
    closures the result has nonnegative coefficients.
    """
    if not w.is_positive:
        raise ValueError("gamma_positive needs a positive braid word")
    gamma = _gamma_rec(w.strands, w.letters, oracle_budget, search_cap)
    s = split_factors(w)
    chi = bennequin_euler_char(w)
    comps = closure_components(w)
    if (2 - chi - comps) % 2:
        raise ValueError("half-integer normalization exponent; bad bookkeeping")
    half = (2 - chi - comps) // 2
    denom = (LaurentPoly({0: 1, 1: 1}) ** (s - 1)) * neg_alpha_pow(half)
    normalized = gamma.divexact(denom)
    return GammaResult(
        gamma=gamma,
        gamma_normalized=normalized,
        split_components=s,
        euler_char=chi,
    )
