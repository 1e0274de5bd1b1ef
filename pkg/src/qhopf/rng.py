"""Deterministic 64-bit generator used wherever pseudo-randomness is needed.

splitmix64 with the usual constants.  The constants are part of the CI
contract: a given seed must produce the same twists, modifiers and mutations
on every platform and in every run.
"""

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & _MASK

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n):
        """Uniform-enough integer in [0, n); bias is irrelevant here."""
        return self.next_u64() % n
