"""Per-sample loop kernels compiled with numba.

Each function takes a batch of rigid motions (2D: angle and translation
components, 3D: rotation matrices and translations) and evaluates one
intersection or separation query per sample.  Signatures match
``_vec`` exactly.
"""

import math

import numpy as np

from .._accel import njit

GRID = 256
GOLDEN_STEPS = 64
INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@njit
def disk_disk_separation(ca, ra, cb, rb, phi, tx, ty):
    n = phi.shape[0]
    fmin = np.empty(n)
    theta = np.empty(n)
    for i in range(n):
        c = math.cos(phi[i])
        s = math.sin(phi[i])
        dx = c * cb[0] - s * cb[1] + tx[i] - ca[0]
        dy = s * cb[0] + c * cb[1] + ty[i] - ca[1]
        fmin[i] = ra + rb - math.sqrt(dx * dx + dy * dy)
        theta[i] = math.atan2(dy, dx)
    return fmin, theta


@njit
def poly_poly_hits(va, vb, phi, tx, ty, tol):
    n = phi.shape[0]
    na = va.shape[0]
    nb = vb.shape[0]
    wb = np.empty((nb, 2))
    hits = np.empty(n, np.uint8)
    for i in range(n):
        c = math.cos(phi[i])
        s = math.sin(phi[i])
        for j in range(nb):
            wb[j, 0] = c * vb[j, 0] - s * vb[j, 1] + tx[i]
            wb[j, 1] = s * vb[j, 0] + c * vb[j, 1] + ty[i]
        separated = False
        for which in range(2):
            pts = va if which == 0 else wb
            m = na if which == 0 else nb
            for e in range(m):
                ex = pts[(e + 1) % m, 0] - pts[e, 0]
                ey = pts[(e + 1) % m, 1] - pts[e, 1]
                ln = math.sqrt(ex * ex + ey * ey)
                ux = ey / ln
                uy = -ex / ln
                amax = -np.inf
                amin = np.inf
                for j in range(na):
                    p = va[j, 0] * ux + va[j, 1] * uy
                    amax = max(amax, p)
                    amin = min(amin, p)
                bmax = -np.inf
                bmin = np.inf
                for j in range(nb):
                    p = wb[j, 0] * ux + wb[j, 1] * uy
                    bmax = max(bmax, p)
                    bmin = min(bmin, p)
                if amax < bmin - tol or bmax < amin - tol:
                    separated = True
                    break
            if separated:
                break
        hits[i] = 0 if separated else 1
    return hits


@njit
def _point_polygon_dist(v, px, py):
    m = v.shape[0]
    inside = True
    best = np.inf
    for e in range(m):
        ax = v[e, 0]
        ay = v[e, 1]
        bx = v[(e + 1) % m, 0]
        by = v[(e + 1) % m, 1]
        ex = bx - ax
        ey = by - ay
        if ex * (py - ay) - ey * (px - ax) < 0:
            inside = False
        t = ((px - ax) * ex + (py - ay) * ey) / (ex * ex + ey * ey)
        t = min(1.0, max(0.0, t))
        dx = px - ax - t * ex
        dy = py - ay - t * ey
        best = min(best, math.sqrt(dx * dx + dy * dy))
    return 0.0 if inside else best


@njit
def poly_disk_hits(v, c, r, phi, tx, ty, mode, tol):
    """Polygon ``v`` against a disk.

    mode 0: polygon fixed, disk moved by the motion.  mode 1: disk fixed,
    polygon moved, so the disk center is pulled back into the polygon frame.
    """
    n = phi.shape[0]
    hits = np.empty(n, np.uint8)
    for i in range(n):
        cs = math.cos(phi[i])
        sn = math.sin(phi[i])
        if mode == 0:
            px = cs * c[0] - sn * c[1] + tx[i]
            py = sn * c[0] + cs * c[1] + ty[i]
        else:
            qx = c[0] - tx[i]
            qy = c[1] - ty[i]
            px = cs * qx + sn * qy
            py = -sn * qx + cs * qy
        hits[i] = 1 if _point_polygon_dist(v, px, py) <= r + tol else 0
    return hits


@njit
def _support2(kind, params, theta):
    c = math.cos(theta)
    s = math.sin(theta)
    if kind == 0:
        best = -np.inf
        for j in range(params.shape[0] // 2):
            best = max(best, params[2 * j] * c + params[2 * j + 1] * s)
        return best
    if kind == 1:
        return params[0] * c + params[1] * s + params[2]
    d = int(params[1])
    h = params[0]
    # cos(m t), sin(m t) by the angle-addition recurrence
    cm, sm = 1.0, 0.0
    for m in range(1, d + 1):
        cm, sm = cm * c - sm * s, sm * c + cm * s
        h += params[1 + m] * cm + params[1 + d + m] * sm
    return h


@njit
def _shift_params(kind, params, alpha, out):
    """Write into ``out`` the record of the body whose support is ``t -> h(t + alpha)``."""
    c = math.cos(alpha)
    s = math.sin(alpha)
    if kind == 2:
        d = int(params[1])
        out[0] = params[0]
        out[1] = params[1]
        cm, sm = 1.0, 0.0
        for m in range(1, d + 1):
            cm, sm = cm * c - sm * s, sm * c + cm * s
            a = params[1 + m]
            b = params[1 + d + m]
            out[1 + m] = a * cm + b * sm
            out[1 + d + m] = b * cm - a * sm
        return
    npts = params.shape[0] // 2 if kind == 0 else 1
    for j in range(npts):
        x = params[2 * j]
        y = params[2 * j + 1]
        out[2 * j] = c * x + s * y
        out[2 * j + 1] = -s * x + c * y
    if kind == 1:
        out[2] = params[2]


@njit
def _grid_support(kind, params, cg, sg, cm, sm, out):
    """Support values on the fixed direction grid, using precomputed harmonic tables."""
    for j in range(cg.shape[0]):
        if kind == 0:
            best = -np.inf
            for v in range(params.shape[0] // 2):
                best = max(best, params[2 * v] * cg[j] + params[2 * v + 1] * sg[j])
            out[j] = best
        elif kind == 1:
            out[j] = params[0] * cg[j] + params[1] * sg[j] + params[2]
        else:
            d = int(params[1])
            h = params[0]
            for m in range(d):
                h += params[2 + m] * cm[j, m] + params[2 + d + m] * sm[j, m]
            out[j] = h


@njit
def _gap_function(ka, pa, kb, pb, phi, tx, ty, theta):
    return (_support2(ka, pa, theta) + _support2(kb, pb, theta + math.pi - phi)
            - tx * math.cos(theta) - ty * math.sin(theta))


@njit
def separation_search(ka, pa, kb, pb, phi, tx, ty):
    """Minimum over directions of ``h_A(u) + h_{gB}(-u)`` and its argmin angle.

    A grid of 256 directions brackets the minimum, then 64 golden-section
    steps refine it.  The minimum is ``-dist(A, gB)`` when disjoint.
    """
    n = phi.shape[0]
    fmin = np.empty(n)
    theta = np.empty(n)
    step = 2.0 * math.pi / GRID
    cg = np.empty(GRID)
    sg = np.empty(GRID)
    for j in range(GRID):
        cg[j] = math.cos(j * step)
        sg[j] = math.sin(j * step)
    dmax = 1
    if ka == 2:
        dmax = max(dmax, int(pa[1]))
    if kb == 2:
        dmax = max(dmax, int(pb[1]))
    cm = np.empty((GRID, dmax))
    sm = np.empty((GRID, dmax))
    for j in range(GRID):
        for m in range(dmax):
            cm[j, m] = math.cos((m + 1) * j * step)
            sm[j, m] = math.sin((m + 1) * j * step)
    ha = np.empty(GRID)
    _grid_support(ka, pa, cg, sg, cm, sm, ha)
    hb = np.empty(GRID)
    pb_shift = np.empty_like(pb)
    for i in range(n):
        _shift_params(kb, pb, math.pi - phi[i], pb_shift)
        _grid_support(kb, pb_shift, cg, sg, cm, sm, hb)
        best = np.inf
        jbest = 0
        for j in range(GRID):
            f = ha[j] + hb[j] - tx[i] * cg[j] - ty[i] * sg[j]
            if f < best:
                best = f
                jbest = j
        lo = (jbest - 1) * step
        hi = (jbest + 1) * step
        x1 = hi - INVPHI * (hi - lo)
        x2 = lo + INVPHI * (hi - lo)
        f1 = _gap_function(ka, pa, kb, pb, phi[i], tx[i], ty[i], x1)
        f2 = _gap_function(ka, pa, kb, pb, phi[i], tx[i], ty[i], x2)
        for _ in range(GOLDEN_STEPS):
            if f1 <= f2:
                hi = x2
                x2 = x1
                f2 = f1
                x1 = hi - INVPHI * (hi - lo)
                f1 = _gap_function(ka, pa, kb, pb, phi[i], tx[i], ty[i], x1)
            else:
                lo = x1
                x1 = x2
                f1 = f2
                x2 = lo + INVPHI * (hi - lo)
                f2 = _gap_function(ka, pa, kb, pb, phi[i], tx[i], ty[i], x2)
        if f1 <= f2:
            xm, fm = x1, f1
        else:
            xm, fm = x2, f2
        if best < fm:
            xm, fm = jbest * step, best
        fmin[i] = fm
        theta[i] = xm
    return fmin, theta


@njit
def ball_ball_hits(ca, ra, cb, rb, rot, t, tol):
    n = rot.shape[0]
    hits = np.empty(n, np.uint8)
    for i in range(n):
        d2 = 0.0
        for k in range(3):
            x = rot[i, k, 0] * cb[0] + rot[i, k, 1] * cb[1] + rot[i, k, 2] * cb[2] + t[i, k] - ca[k]
            d2 += x * x
        hits[i] = 1 if math.sqrt(d2) <= ra + rb + tol else 0
    return hits


@njit
def _point_polytope_dist(verts, normals, offsets, edges, faces, face_len, p, cutoff):
    nf = normals.shape[0]
    outside = False
    best = np.inf
    for f in range(nf):
        d = normals[f, 0] * p[0] + normals[f, 1] * p[1] + normals[f, 2] * p[2] - offsets[f]
        if d > cutoff:
            return d
        if d > 0:
            outside = True
            inside_face = True
            m = face_len[f]
            for j in range(m):
                a = faces[f, j]
                b = faces[f, (j + 1) % m]
                ex = verts[b, 0] - verts[a, 0]
                ey = verts[b, 1] - verts[a, 1]
                ez = verts[b, 2] - verts[a, 2]
                wx = p[0] - verts[a, 0]
                wy = p[1] - verts[a, 1]
                wz = p[2] - verts[a, 2]
                cx = ey * wz - ez * wy
                cy = ez * wx - ex * wz
                cz = ex * wy - ey * wx
                if cx * normals[f, 0] + cy * normals[f, 1] + cz * normals[f, 2] < 0:
                    inside_face = False
                    break
            if inside_face:
                best = min(best, d)
    if not outside:
        return 0.0
    for e in range(edges.shape[0]):
        a = edges[e, 0]
        b = edges[e, 1]
        ex = verts[b, 0] - verts[a, 0]
        ey = verts[b, 1] - verts[a, 1]
        ez = verts[b, 2] - verts[a, 2]
        wx = p[0] - verts[a, 0]
        wy = p[1] - verts[a, 1]
        wz = p[2] - verts[a, 2]
        s = (wx * ex + wy * ey + wz * ez) / (ex * ex + ey * ey + ez * ez)
        s = min(1.0, max(0.0, s))
        dx = wx - s * ex
        dy = wy - s * ey
        dz = wz - s * ez
        best = min(best, math.sqrt(dx * dx + dy * dy + dz * dz))
    return best


@njit
def polytope_ball_hits(verts, normals, offsets, edges, faces, face_len, c, r, rot, t, mode, tol):
    n = rot.shape[0]
    hits = np.empty(n, np.uint8)
    p = np.empty(3)
    for i in range(n):
        for k in range(3):
            if mode == 0:
                p[k] = rot[i, k, 0] * c[0] + rot[i, k, 1] * c[1] + rot[i, k, 2] * c[2] + t[i, k]
            else:
                p[k] = (rot[i, 0, k] * (c[0] - t[i, 0]) + rot[i, 1, k] * (c[1] - t[i, 1])
                        + rot[i, 2, k] * (c[2] - t[i, 2]))
        dist = _point_polytope_dist(verts, normals, offsets, edges, faces, face_len, p, r + tol)
        hits[i] = 1 if dist <= r + tol else 0
    return hits


@njit
def polytope_polytope_hits(va, na, ea, vb, nb, eb, rot, t, tol):
    n = rot.shape[0]
    hits = np.empty(n, np.uint8)
    nvb = vb.shape[0]
    wb = np.empty((nvb, 3))
    rnb = np.empty((nb.shape[0], 3))
    reb = np.empty((eb.shape[0], 3))
    axis = np.empty(3)
    for i in range(n):
        for j in range(nvb):
            for k in range(3):
                wb[j, k] = rot[i, k, 0] * vb[j, 0] + rot[i, k, 1] * vb[j, 1] + rot[i, k, 2] * vb[j, 2] + t[i, k]
        for j in range(nb.shape[0]):
            for k in range(3):
                rnb[j, k] = rot[i, k, 0] * nb[j, 0] + rot[i, k, 1] * nb[j, 1] + rot[i, k, 2] * nb[j, 2]
        for j in range(eb.shape[0]):
            for k in range(3):
                reb[j, k] = rot[i, k, 0] * eb[j, 0] + rot[i, k, 1] * eb[j, 1] + rot[i, k, 2] * eb[j, 2]
        n_axes = na.shape[0] + nb.shape[0] + ea.shape[0] * eb.shape[0]
        separated = False
        for q in range(n_axes):
            if q < na.shape[0]:
                axis[:] = na[q]
            elif q < na.shape[0] + nb.shape[0]:
                axis[:] = rnb[q - na.shape[0]]
            else:
                r = q - na.shape[0] - nb.shape[0]
                e1 = ea[r // eb.shape[0]]
                e2 = reb[r % eb.shape[0]]
                axis[0] = e1[1] * e2[2] - e1[2] * e2[1]
                axis[1] = e1[2] * e2[0] - e1[0] * e2[2]
                axis[2] = e1[0] * e2[1] - e1[1] * e2[0]
                ln = math.sqrt(axis[0] ** 2 + axis[1] ** 2 + axis[2] ** 2)
                if ln < 1e-12:
                    continue
                axis /= ln
            amax = -np.inf
            amin = np.inf
            for j in range(va.shape[0]):
                pj = va[j, 0] * axis[0] + va[j, 1] * axis[1] + va[j, 2] * axis[2]
                amax = max(amax, pj)
                amin = min(amin, pj)
            bmax = -np.inf
            bmin = np.inf
            for j in range(nvb):
                pj = wb[j, 0] * axis[0] + wb[j, 1] * axis[1] + wb[j, 2] * axis[2]
                bmax = max(bmax, pj)
                bmin = min(bmin, pj)
            if amax < bmin - tol or bmax < amin - tol:
                separated = True
                break
        hits[i] = 0 if separated else 1
    return hits
