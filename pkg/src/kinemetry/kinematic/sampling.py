"""Random motions and the deterministic chunked Monte Carlo driver.

Random numbers come from Philox4x64-10, numpy's counter-based generator.
A run with ``seed`` is cut into chunks of ``CHUNK`` samples; chunk ``c``
draws from ``Philox(key = seed * 2**64 + c)`` starting at counter zero, so
every chunk is reproducible in isolation.  Chunk results are reduced in
chunk order, which makes estimates independent of the worker count set by
``KINEMETRY_THREADS``.
"""

from concurrent.futures import ThreadPoolExecutor
import math
import os

import numpy as np

from ..errors import ValidationError

CHUNK = 1 << 16
THREADS_ENV = "KINEMETRY_THREADS"
SEED_MASK = (1 << 64) - 1


def chunk_generator(seed, chunk):
    key = ((int(seed) & SEED_MASK) << 64) | int(chunk)
    return np.random.Generator(np.random.Philox(key=key))


def generator(seed):
    """Generator for a whole (unchunked) stream, equal to chunk 0 of ``seed``."""
    return chunk_generator(seed, 0)


def rotation_angles(u):
    """Uniform SO(2) angles in [0, 2pi) from uniforms ``u``."""
    return 2 * math.pi * np.asarray(u)


def quaternions_to_matrices(q):
    w, x, y, z = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    return np.stack([
        np.stack([1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)], axis=-1),
        np.stack([2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)], axis=-1),
        np.stack([2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)], axis=-1),
    ], axis=-2)


def rotation_matrices_3d(u):
    """Haar-uniform SO(3) matrices from ``(S, 3)`` uniforms via Shoemake's unit quaternion."""
    u = np.asarray(u)
    a, b = np.sqrt(1 - u[:, 0]), np.sqrt(u[:, 0])
    t1, t2 = 2 * math.pi * u[:, 1], 2 * math.pi * u[:, 2]
    q = np.stack([b * np.cos(t2), a * np.sin(t1), a * np.cos(t1), b * np.sin(t2)], axis=-1)
    return quaternions_to_matrices(q)


def sample_rotation(dim, rng, size=None):
    """Haar-uniform rotation(s): an angle for ``dim == 2``, a 3x3 matrix for ``dim == 3``."""
    count = 1 if size is None else size
    if dim == 2:
        out = rotation_angles(rng.random(count))
    elif dim == 3:
        out = rotation_matrices_3d(rng.random((count, 3)))
    else:
        raise ValidationError("rotations are sampled in dimension 2 or 3 only")
    return out[0] if size is None else out


def sample_motions(dim, count, rng, lo, hi):
    """``count`` motions with Haar rotation and translation uniform in the box ``[lo, hi]``.

    Per sample, the uniforms are consumed in a fixed order: the rotation
    (1 in 2D, 3 in 3D) followed by the ``dim`` translation coordinates.
    """
    nrot = 1 if dim == 2 else 3
    u = rng.random((count, nrot + dim))
    trans = np.asarray(lo) + u[:, nrot:] * (np.asarray(hi) - np.asarray(lo))
    rot = rotation_angles(u[:, 0]) if dim == 2 else rotation_matrices_3d(u[:, :3])
    return rot, trans


def worker_count():
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise ValidationError(f"{THREADS_ENV} must be an integer, got {raw!r}")
        if n < 1:
            raise ValidationError(f"{THREADS_ENV} must be positive")
        return n
    return os.cpu_count() or 1


def chunk_sizes(samples):
    if samples < 1:
        raise ValidationError("samples must be at least 1")
    full, rest = divmod(samples, CHUNK)
    return [CHUNK] * full + ([rest] if rest else [])


def run_chunks(task, samples, seed):
    """Apply ``task(rng, size)`` to every chunk and return the results in chunk order."""
    sizes = chunk_sizes(samples)
    jobs = [(chunk_generator(seed, c), n) for c, n in enumerate(sizes)]
    workers = min(worker_count(), len(jobs))
    if workers == 1:
        return [task(rng, n) for rng, n in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: task(*job), jobs))
