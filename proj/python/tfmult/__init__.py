"""Short-time Fourier transforms, modulation-space norms and unimodular
Fourier multipliers.

Fields are numpy arrays of shape (N,) * d sampled on a ``Grid``; any array
with N**d entries is accepted and read in C order.
"""

from ._core import (
    Grid,
    GridMismatch,
    ParameterError,
    amalgam_norm_wfl1,
    annulus_psi,
    apply_multiplier,
    bump_chi,
    chirp_stft_oracle,
    fl1_norm,
    forward_transform,
    gaussian_window,
    inverse_transform,
    m_1_inf_norm,
    m_inf_1_norm,
    modulation_norm,
    schrodinger_propagate,
    stft,
    symbol_gaussian_chirp,
    symbol_piecewise,
    symbol_sin_singular,
    symbol_unimodular,
    verify_amalgam_constants,
    verify_chirp_stft,
    wave_energy,
    wave_propagate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
