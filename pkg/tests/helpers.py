"""Test-only helpers."""

from walled.permgroup import Permutation


def _edges(sigma: Permutation, top: str, bottom: str):
    """Wires of V'(σ): top σ(m) to bottom m, with the two ends at slot n swapped."""
    n = sigma.n

    def relabel(v):
        side, k = v
        if k == n:
            return (bottom if side == top else top, k)
        return v

    return [(relabel((top, sigma(m))), relabel((bottom, m))) for m in range(1, n + 1)]


def algebra_product(s: Permutation, t: Permutation, d: int):
    """Return ``(d**loops, u)`` with ``V'(s) V'(t) = d**loops * V'(u)``.

    Stacks the two wire diagrams (bottom of s glued to top of t) and follows
    the wires; closed loops in the middle each give a factor d.
    """
    n = s.n
    adj = {}
    for a, b in _edges(s, "T", "M") + _edges(t, "M", "B"):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    outer = [("T", k) for k in range(1, n + 1)] + [("B", k) for k in range(1, n + 1)]
    partner, seen = {}, set()
    for start in outer:
        if start in seen:
            continue
        prev, cur = None, start
        seen.add(cur)
        while True:
            nxt = [v for v in adj[cur] if v != prev] or adj[cur]
            prev, cur = cur, nxt[0]
            seen.add(cur)
            if cur[0] != "M":
                break
        partner[start], partner[cur] = cur, start
    loops = 0
    for v in adj:
        if v in seen:
            continue
        loops += 1
        stack = [v]
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            stack.extend(adj[x])
    images = [0] * n
    top_n = partner[("T", n)]
    if top_n[0] == "B":
        for k in range(1, n + 1):
            images[k - 1] = partner[("B", k)][1]
    else:
        b = top_n[1]
        a = partner[("B", n)][1]
        images[n - 1] = b
        images[a - 1] = n
        for m in range(1, n):
            if m != a:
                images[m - 1] = partner[("B", m)][1]
    return d**loops, Permutation(images)
