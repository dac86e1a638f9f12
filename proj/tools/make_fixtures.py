#!/usr/bin/env python3
"""Regenerate the face_list fixtures under tests/fixtures.

Small prisms are written by hand; fullerenes are wound up from their face
spirals (pentagon positions in the spiral order of the dual triangulation).
"""
import itertools
import pathlib
import sys
from collections import deque

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def windup(degrees):
    n = len(degrees)
    adj = [set() for _ in range(n)]

    def connect(a, b):
        if a == b or b in adj[a]:
            raise ValueError("degenerate spiral")
        adj[a].add(b)
        adj[b].add(a)

    open_faces = deque([[0, degrees[0] - 1], [1, degrees[1] - 1]])
    connect(0, 1)
    for k in range(2, n - 1):
        left = degrees[k]

        def to_front():
            nonlocal left
            connect(k, open_faces[0][0])
            open_faces[0][1] -= 1
            left -= 1

        def to_back():
            nonlocal left
            connect(k, open_faces[-1][0])
            open_faces[-1][1] -= 1
            left -= 1

        to_back()
        to_front()
        while open_faces and open_faces[0][1] == 0:
            open_faces.popleft()
            if not open_faces:
                raise ValueError("closed early")
            to_front()
        while open_faces and open_faces[-1][1] == 0:
            open_faces.pop()
            if not open_faces:
                raise ValueError("closed early")
            to_back()
        if left <= 0:
            raise ValueError("face over-full")
        open_faces.append([k, left])
    last = n - 1
    if len(open_faces) != degrees[last]:
        raise ValueError("bad closure")
    for face, val in open_faces:
        if val != 1:
            raise ValueError("bad closure valency")
        connect(last, face)
    for v in range(n):
        if len(adj[v]) != degrees[v]:
            raise ValueError("degree mismatch")
    return adj


def dual_faces(adj):
    """Fullerene facets as cycles of dual triangles (the fullerene vertices)."""
    n = len(adj)
    triangles = sorted({tuple(sorted((a, b, c)))
                        for a in range(n) for b in adj[a] for c in adj[a] & adj[b]})
    if len(triangles) != 2 * n - 4:
        raise ValueError("separating triangle or non-triangulation")
    index = {t: i for i, t in enumerate(triangles)}
    faces = []
    for f in range(n):
        link = adj[f]
        start = min(link)
        cycle = [start]
        prev = None
        cur = start
        while True:
            nxt = [x for x in adj[cur] & link if x != prev and x != cur]
            nxt = [x for x in nxt if x not in cycle or (x == start and len(cycle) == len(link))]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if cur == start:
                break
            cycle.append(cur)
        if len(cycle) != len(link):
            raise ValueError("link is not a cycle")
        faces.append([index[tuple(sorted((f, cycle[i], cycle[(i + 1) % len(cycle)])))]
                      for i in range(len(cycle))])
    return faces


def fullerene_from_spiral(vertices, pentagons):
    faces = vertices // 2 + 2
    degrees = [6] * faces
    for p in pentagons:
        degrees[p - 1] = 5
    return dual_faces(windup(degrees))


def first_fullerene(vertices):
    faces = vertices // 2 + 2
    for pent in itertools.combinations(range(1, faces + 1), 12):
        try:
            return pent, fullerene_from_spiral(vertices, pent)
        except ValueError:
            continue
    raise ValueError(f"no spiral for C{vertices}")


def write(name, comment, faces):
    lines = [f"# {comment}"] + [" ".join(map(str, f)) for f in faces]
    (OUT / name).write_text("\n".join(lines) + "\n")


def prism(k):
    top = list(range(k))
    bottom = list(range(k, 2 * k))
    faces = [top, bottom[::-1]]
    for i in range(k):
        j = (i + 1) % k
        faces.append([i, k + i, k + j, j])
    return faces


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write("tetrahedron.txt", "tetrahedron", [[0, 1, 2], [0, 3, 1], [1, 3, 2], [2, 3, 0]])
    write("prism3.txt", "triangular prism", prism(3))
    write("cube.txt", "cube", prism(4))
    write("prism5.txt", "pentagonal prism", prism(5))
    write("dodecahedron.txt", "dodecahedron (C20 fullerene), spiral 1-12",
          fullerene_from_spiral(20, range(1, 13)))
    for n in (24, 26, 28):
        pent, faces = first_fullerene(n)
        write(f"c{n}.txt", f"C{n} fullerene, pentagon spiral {','.join(map(str, pent))}", faces)
    c60 = (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32)
    write("c60.txt", "C60 truncated icosahedron, pentagon spiral " + ",".join(map(str, c60)),
          fullerene_from_spiral(60, c60))
    return 0


if __name__ == "__main__":
    sys.exit(main())
