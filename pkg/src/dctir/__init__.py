"""dctir: compressed-domain image retrieval toolkit.

Subsystems:

* :mod:`dctir.dct` - exact 8x8 DCT, color conversion, quantization, zig-zag.
* :mod:`dctir.jpeg` - baseline JPEG parsing to quantized coefficients and
  encoding back to valid JFIF streams.
* :mod:`dctir.pipeline` - spatial preprocessing and the 3D DCT-cube layout
  with static frequency channel selection and per-channel normalization.
* :mod:`dctir.nn` - a small self-contained trainable convolutional model
  with a pooled global descriptor head and an attention-scored local head.
* :mod:`dctir.retrieval` - feature extraction, persistent gallery index and
  two-stage search (global cosine ranking, affine-verified re-ranking).
* :mod:`dctir.evaluate` - Easy/Medium/Hard mean-average-precision protocol.
* :mod:`dctir.cli` - operator commands (inspect, gen-synthetic, train,
  index, search, evaluate, bench).
"""

__version__ = "0.1.0"
