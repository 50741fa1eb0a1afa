from src.kernels.beamforming import (
    beam_weights_ref,
    beam_weights_vec,
    build_steered_channel_ref,
    build_steered_channel_vec,
    steering_vector_ref,
    steering_vector_vec,
)
from src.kernels.channel_estimation import (
    exponential_correlation,
    lse_estimate_ref,
    lse_estimate_vec,
    mmse_estimate_ref,
    mmse_estimate_vec,
    mmse_filter_ref,
    mmse_filter_vec,
)
from src.kernels.fft import (
    digit_reversal_permutation,
    fft_radix4_ref,
    fft_radix4_vec,
    ifft_radix4_ref,
    ifft_radix4_vec,
    make_fft_plan,
)
from src.kernels.precoding import zf_precoder_ref, zf_precoder_vec

__all__ = [
    "beam_weights_ref",
    "beam_weights_vec",
    "build_steered_channel_ref",
    "build_steered_channel_vec",
    "digit_reversal_permutation",
    "exponential_correlation",
    "fft_radix4_ref",
    "fft_radix4_vec",
    "ifft_radix4_ref",
    "ifft_radix4_vec",
    "lse_estimate_ref",
    "lse_estimate_vec",
    "make_fft_plan",
    "mmse_estimate_ref",
    "mmse_estimate_vec",
    "mmse_filter_ref",
    "mmse_filter_vec",
    "steering_vector_ref",
    "steering_vector_vec",
    "zf_precoder_ref",
    "zf_precoder_vec",
]
