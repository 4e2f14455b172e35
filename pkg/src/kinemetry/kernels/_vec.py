"""Vectorized pure-numpy kernels; same signatures and algorithms as ``_jit``.

Large batches are processed in sub-batches so temporaries stay a few
megabytes regardless of the chunk size.
"""

import math

import numpy as np

from ._jit import GOLDEN_STEPS, GRID, INVPHI

SUB = 2048


def _batched(fn, n, *outs_dtype):
    outs = [np.empty(n, dt) for dt in outs_dtype]
    for lo in range(0, n, SUB):
        res = fn(slice(lo, min(n, lo + SUB)))
        if len(outs) == 1:
            res = (res,)
        for o, r in zip(outs, res):
            o[lo:lo + len(r)] = r
    return outs[0] if len(outs) == 1 else tuple(outs)


def disk_disk_separation(ca, ra, cb, rb, phi, tx, ty):
    c, s = np.cos(phi), np.sin(phi)
    dx = c * cb[0] - s * cb[1] + tx - ca[0]
    dy = s * cb[0] + c * cb[1] + ty - ca[1]
    return ra + rb - np.sqrt(dx * dx + dy * dy), np.arctan2(dy, dx)


def _edge_normals(pts):
    e = np.roll(pts, -1, axis=-2) - pts
    ln = np.sqrt(e[..., 0] ** 2 + e[..., 1] ** 2)
    return np.stack([e[..., 1] / ln, -e[..., 0] / ln], axis=-1)


def poly_poly_hits(va, vb, phi, tx, ty, tol):
    na_axes = _edge_normals(va)

    def run(sl):
        c, s = np.cos(phi[sl]), np.sin(phi[sl])
        wx = c[:, None] * vb[:, 0] - s[:, None] * vb[:, 1] + tx[sl, None]
        wy = s[:, None] * vb[:, 0] + c[:, None] * vb[:, 1] + ty[sl, None]
        wb = np.stack([wx, wy], axis=-1)
        axes = np.concatenate([np.broadcast_to(na_axes, (len(c),) + na_axes.shape), _edge_normals(wb)], axis=1)
        pa = np.einsum("sad,vd->sav", axes, va)
        pb = np.einsum("sad,svd->sav", axes, wb)
        sep = (pa.max(axis=2) < pb.min(axis=2) - tol) | (pb.max(axis=2) < pa.min(axis=2) - tol)
        return (~sep.any(axis=1)).astype(np.uint8)

    return _batched(run, len(phi), np.uint8)


def _point_polygon_dist(v, p):
    a = v
    e = np.roll(v, -1, axis=0) - v
    w = p[:, None, :] - a[None, :, :]
    cross = e[None, :, 0] * w[..., 1] - e[None, :, 1] * w[..., 0]
    inside = (cross >= 0).all(axis=1)
    t = np.clip((w * e[None]).sum(axis=-1) / (e * e).sum(axis=-1), 0.0, 1.0)
    d = w - t[..., None] * e[None]
    dist = np.sqrt(d[..., 0] ** 2 + d[..., 1] ** 2).min(axis=1)
    return np.where(inside, 0.0, dist)


def poly_disk_hits(v, c, r, phi, tx, ty, mode, tol):
    cs, sn = np.cos(phi), np.sin(phi)
    if mode == 0:
        p = np.stack([cs * c[0] - sn * c[1] + tx, sn * c[0] + cs * c[1] + ty], axis=-1)
    else:
        qx, qy = c[0] - tx, c[1] - ty
        p = np.stack([cs * qx + sn * qy, -sn * qx + cs * qy], axis=-1)
    return _batched(lambda sl: (_point_polygon_dist(v, p[sl]) <= r + tol).astype(np.uint8), len(phi), np.uint8)


def _support2(kind, params, theta):
    theta = np.asarray(theta, dtype=float)
    if kind == 0:
        pts = params.reshape(-1, 2)
        return (np.cos(theta)[..., None] * pts[:, 0] + np.sin(theta)[..., None] * pts[:, 1]).max(axis=-1)
    if kind == 1:
        return params[0] * np.cos(theta) + params[1] * np.sin(theta) + params[2]
    d = int(params[1])
    h = np.full(theta.shape, params[0])
    for m in range(1, d + 1):
        h = h + params[1 + m] * np.cos(m * theta) + params[1 + d + m] * np.sin(m * theta)
    return h


def _gap_function(ka, pa, kb, pb, phi, tx, ty, theta):
    return (_support2(ka, pa, theta) + _support2(kb, pb, theta + math.pi - phi)
            - tx * np.cos(theta) - ty * np.sin(theta))


def separation_search(ka, pa, kb, pb, phi, tx, ty):
    step = 2.0 * math.pi / GRID
    grid = np.arange(GRID) * step

    def run(sl):
        ph, x, y = phi[sl, None], tx[sl, None], ty[sl, None]
        f = _gap_function(ka, pa, kb, pb, ph, x, y, grid[None, :])
        jbest = f.argmin(axis=1)
        best = f[np.arange(len(jbest)), jbest]
        ph, x, y = ph[:, 0], x[:, 0], y[:, 0]
        lo = (jbest - 1) * step
        hi = (jbest + 1) * step
        x1 = hi - INVPHI * (hi - lo)
        x2 = lo + INVPHI * (hi - lo)
        f1 = _gap_function(ka, pa, kb, pb, ph, x, y, x1)
        f2 = _gap_function(ka, pa, kb, pb, ph, x, y, x2)
        for _ in range(GOLDEN_STEPS):
            left = f1 <= f2
            hi = np.where(left, x2, hi)
            lo = np.where(left, lo, x1)
            nx1 = np.where(left, hi - INVPHI * (hi - lo), x2)
            nx2 = np.where(left, x1, lo + INVPHI * (hi - lo))
            fnew = _gap_function(ka, pa, kb, pb, ph, x, y, np.where(left, nx1, nx2))
            f1, f2 = np.where(left, fnew, f2), np.where(left, f1, fnew)
            x1, x2 = nx1, nx2
        xm = np.where(f1 <= f2, x1, x2)
        fm = np.minimum(f1, f2)
        use_grid = best < fm
        return np.where(use_grid, best, fm), np.where(use_grid, jbest * step, xm)

    return _batched(run, len(phi), float, float)


def ball_ball_hits(ca, ra, cb, rb, rot, t, tol):
    centers = rot @ cb + t - ca
    return (np.sqrt((centers**2).sum(axis=1)) <= ra + rb + tol).astype(np.uint8)


def _point_polytope_dist(verts, normals, offsets, edges, faces, face_len, p):
    d = p @ normals.T - offsets
    outside = (d > 0).any(axis=1)
    best = np.full(len(p), np.inf)
    for f in range(len(normals)):
        m = face_len[f]
        idx = faces[f, :m]
        a = verts[idx]
        e = verts[np.roll(idx, -1)] - a
        w = p[:, None, :] - a[None]
        inside = (np.cross(e[None], w) @ normals[f] >= 0).all(axis=1)
        best = np.where((d[:, f] > 0) & inside, np.minimum(best, d[:, f]), best)
    a = verts[edges[:, 0]]
    e = verts[edges[:, 1]] - a
    w = p[:, None, :] - a[None]
    s = np.clip((w * e[None]).sum(axis=-1) / (e * e).sum(axis=-1), 0.0, 1.0)
    dd = w - s[..., None] * e[None]
    best = np.minimum(best, np.sqrt((dd**2).sum(axis=-1)).min(axis=1))
    return np.where(outside, best, 0.0)


def polytope_ball_hits(verts, normals, offsets, edges, faces, face_len, c, r, rot, t, mode, tol):
    if mode == 0:
        p = rot @ c + t
    else:
        p = np.einsum("skj,sk->sj", rot, c - t)

    def run(sl):
        return (_point_polytope_dist(verts, normals, offsets, edges, faces, face_len, p[sl]) <= r + tol).astype(np.uint8)

    return _batched(run, len(rot), np.uint8)


def polytope_polytope_hits(va, na, ea, vb, nb, eb, rot, t, tol):
    def run(sl):
        R, tt = rot[sl], t[sl]
        wb = np.einsum("skj,vj->svk", R, vb) + tt[:, None, :]
        rnb = np.einsum("skj,vj->svk", R, nb)
        reb = np.einsum("skj,vj->svk", R, eb)
        cross = np.cross(ea[None, :, None, :], reb[:, None, :, :]).reshape(len(R), -1, 3)
        ln = np.sqrt((cross**2).sum(axis=-1))
        valid = ln >= 1e-12
        cross = cross / np.where(valid, ln, 1.0)[..., None]
        axes = np.concatenate([np.broadcast_to(na, (len(R),) + na.shape), rnb, cross], axis=1)
        valid = np.concatenate([np.ones((len(R), len(na) + len(nb)), bool), valid], axis=1)
        pa = np.einsum("sad,vd->sav", axes, va)
        pb = np.einsum("sad,svd->sav", axes, wb)
        sep = (pa.max(axis=2) < pb.min(axis=2) - tol) | (pb.max(axis=2) < pa.min(axis=2) - tol)
        return (~(sep & valid).any(axis=1)).astype(np.uint8)

    return _batched(run, len(rot), np.uint8)
