"""Write every graph of order N (one per isomorphism class) as graph6 lines.

Stands in for ``geng`` when nauty's command-line tools are unavailable: the
universe is grown vertex by vertex and deduplicated with nauty's canonical
certificate through ``pynauty``.  Output lines are nauty-canonical labellings.

    python tools/nauty_universe.py 9 > nine.g6
"""

import argparse
import sys
import time

import pynauty


def _pynauty_graph(rows, n):
    adj = {i: [j for j in range(n) if rows[i] >> j & 1] for i in range(n)}
    return pynauty.Graph(n, adjacency_dict=adj)


def _graph6(rows, n):
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(rows[i] >> j & 1)
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(chr(v + 63))
    return "".join(out)


def _canonical_rows(rows, n):
    g = _pynauty_graph(rows, n)
    lab = pynauty.canon_label(g)
    pos = [0] * n
    for p, v in enumerate(lab):
        pos[v] = p
    new = [0] * n
    for v in range(n):
        r = 0
        for w in range(n):
            if rows[v] >> w & 1:
                r |= 1 << pos[w]
        new[pos[v]] = r
    return tuple(new)


def universe(n):
    level = {(): ()} if n >= 0 else {}
    for k in range(1, n + 1):
        nxt = {}
        for rows in level.values():
            for mask in range(1 << (k - 1)):
                ext = [r | ((mask >> i & 1) << (k - 1)) for i, r in enumerate(rows)]
                ext.append(mask)
                cert = pynauty.certificate(_pynauty_graph(ext, k))
                if cert not in nxt:
                    nxt[cert] = tuple(ext)
        level = nxt
        print(f"order {k}: {len(level)} classes", file=sys.stderr)
    return [_graph6(_canonical_rows(rows, n), n) for rows in level.values()]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int)
    parser.add_argument("--output", "-o")
    args = parser.parse_args()
    start = time.perf_counter()
    lines = sorted(universe(args.n))
    text = "".join(s + "\n" for s in lines)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"{len(lines)} graphs in {time.perf_counter() - start:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
