"""8x8 block DCT, color conversion, quantization and zig-zag ordering.

This module is the numerical bedrock shared by the JPEG codec and the
feature pipeline. Conventions used throughout the package:

* a pixel block is an 8x8 float array of level-shifted samples,
* a coefficient block is an 8x8 float array indexed ``[u, v]`` where
  ``u`` is the vertical and ``v`` the horizontal frequency,
* ``coeffs[0, 0]`` is the DC term, the other 63 entries are AC terms,
* a quantization table is an 8x8 integer array with entries in [1, 255].

All transform arithmetic is done in double precision; the forward and
inverse transforms are exact inverses of each other up to floating-point
error. The level shift (subtract 128 before the forward transform, add it
back after the inverse) is the caller's responsibility.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "BLOCK_SIZE",
    "DCT_MATRIX",
    "ZIGZAG_POSITIONS",
    "ZIGZAG_FLAT",
    "ZIGZAG_INVERSE",
    "forward_dct",
    "inverse_dct",
    "forward_dct_blocks",
    "inverse_dct_blocks",
    "rgb_to_ycbcr",
    "ycbcr_to_rgb",
    "quantize",
    "dequantize",
    "zigzag_scan",
    "zigzag_unscan",
    "chroma_downsample",
    "chroma_upsample",
]

BLOCK_SIZE = 8


def _dct_matrix(n: int = BLOCK_SIZE) -> np.ndarray:
    """Orthonormal 1D DCT-II basis: M[u, x] = c_u/2 * cos((2x+1) u pi / 16).

    c_0 = 1/sqrt(2), c_u = 1 otherwise, so M @ M.T = I.
    """
    u = np.arange(n)[:, None].astype(np.float64)
    x = np.arange(n)[None, :].astype(np.float64)
    m = 0.5 * np.cos((2.0 * x + 1.0) * u * np.pi / (2.0 * n))
    m[0, :] /= np.sqrt(2.0)
    return m


DCT_MATRIX = _dct_matrix()


def _zigzag_positions(n: int = BLOCK_SIZE) -> list[tuple[int, int]]:
    """Anti-diagonal traversal of an n x n grid starting at (0, 0), (0, 1)."""
    order = []
    for s in range(2 * n - 1):
        diag = [(s - v, v) for v in range(max(0, s - n + 1), min(s, n - 1) + 1)]
        # even anti-diagonals run bottom-left to top-right, odd ones reverse
        order.extend(diag if s % 2 else diag[::-1])
    return order


# k-th scan element lives at (u, v) = ZIGZAG_POSITIONS[k]
ZIGZAG_POSITIONS = _zigzag_positions()
# flat row-major index of the k-th scan element
ZIGZAG_FLAT = np.array([u * BLOCK_SIZE + v for u, v in ZIGZAG_POSITIONS], dtype=np.intp)
# inverse permutation: flat index -> scan position
ZIGZAG_INVERSE = np.argsort(ZIGZAG_FLAT)


def forward_dct(block: np.ndarray) -> np.ndarray:
    """2D DCT of one 8x8 block with orthonormal C_u C_v / 4 scaling."""
    block = np.asarray(block, dtype=np.float64)
    return DCT_MATRIX @ block @ DCT_MATRIX.T


def inverse_dct(coeffs: np.ndarray) -> np.ndarray:
    """Exact inverse of :func:`forward_dct`."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    return DCT_MATRIX.T @ coeffs @ DCT_MATRIX


def forward_dct_blocks(plane: np.ndarray) -> np.ndarray:
    """Blockwise DCT of a (H, W) plane with H, W multiples of 8.

    Returns an array of shape (H/8, W/8, 8, 8).
    """
    h, w = plane.shape
    if h % BLOCK_SIZE or w % BLOCK_SIZE:
        raise ValueError(f"plane dims {plane.shape} not multiples of {BLOCK_SIZE}")
    grid = plane.reshape(h // 8, 8, w // 8, 8).transpose(0, 2, 1, 3)
    return DCT_MATRIX @ grid @ DCT_MATRIX.T


def inverse_dct_blocks(blocks: np.ndarray) -> np.ndarray:
    """Inverse of :func:`forward_dct_blocks`: (gh, gw, 8, 8) -> (gh*8, gw*8)."""
    gh, gw = blocks.shape[:2]
    pix = DCT_MATRIX.T @ np.asarray(blocks, dtype=np.float64) @ DCT_MATRIX
    return pix.transpose(0, 2, 1, 3).reshape(gh * 8, gw * 8)


# JFIF RGB <-> YCbCr matrices.
_RGB_TO_YCBCR = np.array(
    [
        [0.299, 0.587, 0.114],
        [-0.168736, -0.331264, 0.5],
        [0.5, -0.418688, -0.081312],
    ],
    dtype=np.float64,
)
_YCBCR_OFFSET = np.array([0.0, 128.0, 128.0], dtype=np.float64)
_YCBCR_TO_RGB = np.linalg.inv(_RGB_TO_YCBCR)


def rgb_to_ycbcr(rgb: np.ndarray) -> np.ndarray:
    """JFIF color conversion; input/output shaped (..., 3), values in [0, 255].

    Output is clamped to [0, 255] (Cb/Cr can reach 255.5 at gamut corners).
    """
    rgb = np.asarray(rgb, dtype=np.float64)
    ycc = rgb @ _RGB_TO_YCBCR.T + _YCBCR_OFFSET
    return np.clip(ycc, 0.0, 255.0)


def ycbcr_to_rgb(ycc: np.ndarray) -> np.ndarray:
    """Analytic inverse of :func:`rgb_to_ycbcr`; output clamped to [0, 255].

    Returns floats; rounding to integer samples is the caller's business.
    """
    ycc = np.asarray(ycc, dtype=np.float64)
    rgb = (ycc - _YCBCR_OFFSET) @ _YCBCR_TO_RGB.T
    return np.clip(rgb, 0.0, 255.0)


def quantize(coeffs: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Divide per frequency and round half away from zero. Returns int32."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    table = np.asarray(table, dtype=np.float64)
    scaled = coeffs / table
    return (np.sign(scaled) * np.floor(np.abs(scaled) + 0.5)).astype(np.int32)


def dequantize(qcoeffs: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Multiply quantized integers back by their table entries."""
    return np.asarray(qcoeffs, dtype=np.float64) * np.asarray(table, dtype=np.float64)


def zigzag_scan(coeffs: np.ndarray) -> np.ndarray:
    """8x8 block -> length-64 sequence in zig-zag order."""
    return np.asarray(coeffs).reshape(64)[ZIGZAG_FLAT]


def zigzag_unscan(seq: np.ndarray) -> np.ndarray:
    """Length-64 zig-zag sequence -> 8x8 block. Inverse of zigzag_scan."""
    seq = np.asarray(seq)
    if seq.shape != (64,):
        raise ValueError(f"expected 64 entries, got shape {seq.shape}")
    out = np.empty(64, dtype=seq.dtype)
    out[ZIGZAG_FLAT] = seq
    return out.reshape(8, 8)


def _pad_to_even(plane: np.ndarray) -> np.ndarray:
    h, w = plane.shape
    return np.pad(plane, ((0, h % 2), (0, w % 2)), mode="edge")


def chroma_downsample(plane: np.ndarray) -> np.ndarray:
    """Factor-2 2x2 box average; odd dims are edge-replicated first."""
    plane = _pad_to_even(np.asarray(plane, dtype=np.float64))
    h, w = plane.shape
    return plane.reshape(h // 2, 2, w // 2, 2).mean(axis=(1, 3))


def chroma_upsample(plane: np.ndarray) -> np.ndarray:
    """Factor-2 bilinear upsampling to exactly double size."""
    plane = np.asarray(plane, dtype=np.float64)
    h, w = plane.shape
    return _bilinear_axis(_bilinear_axis(plane, 2 * h, axis=0), 2 * w, axis=1)


def _bilinear_axis(plane: np.ndarray, new_len: int, axis: int) -> np.ndarray:
    """1D bilinear resample along one axis, half-pixel centers, edge clamp."""
    old_len = plane.shape[axis]
    if new_len == old_len:
        return plane
    pos = (np.arange(new_len, dtype=np.float64) + 0.5) * (old_len / new_len) - 0.5
    pos = np.clip(pos, 0.0, old_len - 1.0)
    lo = np.floor(pos).astype(np.intp)
    hi = np.minimum(lo + 1, old_len - 1)
    frac = pos - lo
    a = np.take(plane, lo, axis=axis)
    b = np.take(plane, hi, axis=axis)
    shape = [1] * plane.ndim
    shape[axis] = new_len
    frac = frac.reshape(shape)
    return a * (1.0 - frac) + b * frac
