from enum import Enum


class KernelName(str, Enum):
    LSE  = "lse"
    MMSE = "mmse"
    FFT  = "fft"
    ZF   = "zf"
    BEAM = "beam"

    @property
    def uses_fft_sizes(self) -> bool:
        return self is KernelName.FFT
