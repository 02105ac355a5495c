"""Rotation-system search kernels (numba when available, see ``_accel``).

Encoding, for a graph with ``E`` edges:

* end ``a`` in ``0..2E-1``: edge ``a >> 1`` seen from one endpoint; ``a ^ 1``
  is the other end.
* state ``x = 2*a + s`` with ``s = 0`` (positive local orientation) or ``1``
  (negative): "leave the vertex of end ``a`` along its edge".
* ``succ[a]`` / ``pred[a]``: partial cyclic order of ends around a vertex,
  ``-1`` when unset.
* ``sig[e]``: edge signature, ``0`` while undecided.

Face tracing: from state ``(a, s)`` cross the edge, flip the orientation if
the signature is negative, then take the next end at the far vertex
(``succ`` for positive orientation, ``pred`` for negative).  Each face is
traced once; the reverse traversal of every step is marked used as well.
"""
from __future__ import annotations

import numpy as np

from .._accel import jit

NEWFACE = 0
TRAVERSE = 1
STEP = 2
ROTCHOICE = 3
ARRIVE = 4
BACKTRACK = 5

KIND_SIG = 0
KIND_USED = 1
KIND_LINK = 2

FOUND = 1
EXHAUSTED = 0
PAUSED = 2

# register slots
R_PHASE, R_CUR, R_START, R_FLEN, R_FACES, R_TRAV, R_NEG, R_SP, R_TP, R_Y, R_NODES = range(11)
N_REGS = 11


@jit
def _reverse_state(x, sig):
    a = x >> 1
    s = 1 - 2 * (x & 1)
    s2 = -s * sig[a >> 1]
    return 2 * (a ^ 1) + (0 if s2 > 0 else 1)


@jit
def rotation_search(
    end_vertex, vstart, vends, deg, scan, n_edges, min_face,
    need_orient, need_nonorient,
    succ, pred, sig, used,
    tr_kind, tr_idx,
    fr_trail, fr_kind, fr_cursor, fr_cur, fr_start, fr_flen, fr_faces, fr_trav, fr_neg,
    regs, max_steps,
):
    """Resumable depth-first search for an embedding with enough faces.

    Success means every state is covered and either some signature is
    negative with ``faces >= need_nonorient`` or none is and
    ``faces >= need_orient``.  Returns FOUND, EXHAUSTED or PAUSED (step
    budget spent; all progress is kept in the arrays and ``regs``).
    """
    need_any = min(need_orient, need_nonorient)
    total = 2 * n_edges
    phase = regs[R_PHASE]
    cur = regs[R_CUR]
    face_start = regs[R_START]
    face_len = regs[R_FLEN]
    faces = regs[R_FACES]
    trav = regs[R_TRAV]
    neg = regs[R_NEG]
    sp = regs[R_SP]
    tp = regs[R_TP]
    y = regs[R_Y]
    steps = 0
    status = PAUSED
    while True:
        if steps >= max_steps:
            status = PAUSED
            break
        steps += 1

        if phase == NEWFACE:
            x = -1
            for k in range(scan.shape[0]):
                if used[scan[k]] == 0:
                    x = scan[k]
                    break
            if x < 0:
                if (neg > 0 and faces >= need_nonorient) or (neg == 0 and faces >= need_orient):
                    status = FOUND
                    break
                phase = BACKTRACK
                continue
            face_start = x
            cur = x
            face_len = 0
            phase = TRAVERSE

        elif phase == TRAVERSE:
            e = cur >> 2
            if sig[e] == 0:
                fr_trail[sp] = tp
                fr_kind[sp] = KIND_SIG
                fr_cursor[sp] = 0
                fr_cur[sp] = cur
                fr_start[sp] = face_start
                fr_flen[sp] = face_len
                fr_faces[sp] = faces
                fr_trav[sp] = trav
                fr_neg[sp] = neg
                sp += 1
                sig[e] = 1
                tr_kind[tp] = KIND_SIG
                tr_idx[tp] = e
                tp += 1
            phase = STEP

        elif phase == STEP:
            a = cur >> 1
            s = 1 - 2 * (cur & 1)
            e = a >> 1
            rev = _reverse_state(cur, sig)
            used[cur] = 1
            used[rev] = 1
            tr_kind[tp] = KIND_USED
            tr_idx[tp] = cur
            tp += 1
            face_len += 1
            trav += 1
            b = a ^ 1
            s2 = s * sig[e]
            if s2 > 0:
                nxt = succ[b]
            else:
                nxt = pred[b]
            if nxt < 0:
                w = end_vertex[b]
                fr_trail[sp] = tp
                fr_kind[sp] = KIND_LINK
                fr_cursor[sp] = vstart[w]
                fr_cur[sp] = cur
                fr_start[sp] = face_start
                fr_flen[sp] = face_len
                fr_faces[sp] = faces
                fr_trav[sp] = trav
                fr_neg[sp] = neg
                sp += 1
                phase = ROTCHOICE
            else:
                y = 2 * nxt + (0 if s2 > 0 else 1)
                phase = ARRIVE

        elif phase == ROTCHOICE:
            top = sp - 1
            a = cur >> 1
            s = 1 - 2 * (cur & 1)
            e = a >> 1
            b = a ^ 1
            s2 = s * sig[e]
            w = end_vertex[b]
            cursor = fr_cursor[top]
            stop = vstart[w + 1]
            chosen = -1
            p = -1
            q = -1
            while cursor < stop:
                f = vends[cursor]
                cursor += 1
                if s2 > 0:
                    p = b
                    q = f
                else:
                    p = f
                    q = b
                if succ[p] >= 0 or pred[q] >= 0:
                    continue
                if p == q and deg[w] != 1:
                    continue
                c = q
                length = 1
                while c != p and succ[c] >= 0:
                    c = succ[c]
                    length += 1
                if c == p and length != deg[w]:
                    continue
                chosen = f
                break
            fr_cursor[top] = cursor
            if chosen < 0:
                sp -= 1
                phase = BACKTRACK
                continue
            succ[p] = q
            pred[q] = p
            tr_kind[tp] = KIND_LINK
            tr_idx[tp] = p
            tp += 1
            y = 2 * chosen + (0 if s2 > 0 else 1)
            phase = ARRIVE

        elif phase == ARRIVE:
            if y == face_start:
                faces += 1
                if faces + (total - trav) // min_face < need_any:
                    phase = BACKTRACK
                else:
                    phase = NEWFACE
            elif used[y] != 0:
                phase = BACKTRACK
            else:
                need_cur = min_face - face_len
                if need_cur < 1:
                    need_cur = 1
                if faces + 1 + (total - trav - need_cur) // min_face < need_any:
                    phase = BACKTRACK
                else:
                    cur = y
                    phase = TRAVERSE

        else:  # BACKTRACK
            if sp == 0:
                status = EXHAUSTED
                break
            top = sp - 1
            target = fr_trail[top]
            while tp > target:
                tp -= 1
                kind = tr_kind[tp]
                idx = tr_idx[tp]
                if kind == KIND_LINK:
                    q = succ[idx]
                    succ[idx] = -1
                    pred[q] = -1
                elif kind == KIND_USED:
                    used[idx] = 0
                    used[_reverse_state(idx, sig)] = 0
                else:
                    sig[idx] = 0
            cur = fr_cur[top]
            face_start = fr_start[top]
            face_len = fr_flen[top]
            faces = fr_faces[top]
            trav = fr_trav[top]
            neg = fr_neg[top]
            if fr_kind[top] == KIND_SIG:
                if fr_cursor[top] == 0:
                    fr_cursor[top] = 1
                    e = cur >> 2
                    sig[e] = -1
                    tr_kind[tp] = KIND_SIG
                    tr_idx[tp] = e
                    tp += 1
                    neg += 1
                    phase = STEP
                else:
                    sp -= 1
            else:
                phase = ROTCHOICE

    regs[R_PHASE] = phase
    regs[R_CUR] = cur
    regs[R_START] = face_start
    regs[R_FLEN] = face_len
    regs[R_FACES] = faces
    regs[R_TRAV] = trav
    regs[R_NEG] = neg
    regs[R_SP] = sp
    regs[R_TP] = tp
    regs[R_Y] = y
    regs[R_NODES] += steps
    return status


@jit
def count_faces(end_vertex, succ, pred, sig):
    """Number of faces of a complete embedding (each face has two traversals)."""
    n_states = 2 * end_vertex.shape[0]
    seen = np.zeros(n_states, dtype=np.int8)
    orbits = 0
    for x0 in range(n_states):
        if seen[x0]:
            continue
        orbits += 1
        x = x0
        while seen[x] == 0:
            seen[x] = 1
            a = x >> 1
            s = 1 - 2 * (x & 1)
            b = a ^ 1
            s2 = s * sig[a >> 1]
            nxt = succ[b] if s2 > 0 else pred[b]
            x = 2 * nxt + (0 if s2 > 0 else 1)
    return orbits // 2


def new_workspace(n_edges: int) -> dict[str, np.ndarray]:
    n_ends = 2 * n_edges
    depth = 8 * n_edges + 8
    i64 = np.int64
    return {
        "succ": np.full(n_ends, -1, dtype=i64),
        "pred": np.full(n_ends, -1, dtype=i64),
        "sig": np.zeros(n_edges, dtype=i64),
        "used": np.zeros(2 * n_ends, dtype=np.int8),
        "tr_kind": np.zeros(depth, dtype=i64),
        "tr_idx": np.zeros(depth, dtype=i64),
        "fr_trail": np.zeros(depth, dtype=i64),
        "fr_kind": np.zeros(depth, dtype=i64),
        "fr_cursor": np.zeros(depth, dtype=i64),
        "fr_cur": np.zeros(depth, dtype=i64),
        "fr_start": np.zeros(depth, dtype=i64),
        "fr_flen": np.zeros(depth, dtype=i64),
        "fr_faces": np.zeros(depth, dtype=i64),
        "fr_trav": np.zeros(depth, dtype=i64),
        "fr_neg": np.zeros(depth, dtype=i64),
        "regs": np.zeros(N_REGS, dtype=i64),
    }
