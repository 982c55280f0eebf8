"""Small deterministic 64-bit PRNG (splitmix64).

Used everywhere randomness is needed so that results are reproducible across
platforms and Python versions; the stdlib Mersenne Twister is avoided only
because its stream is not pinned by this package's compatibility promise.
"""

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection."""
        if n <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def spawn(self, index: int) -> "SplitMix64":
        """Derived independent stream for trial `index`."""
        return SplitMix64(self.next_seed_for(index))

    def next_seed_for(self, index: int) -> int:
        z = (self.state ^ (index * 0xD1B54A32D192ED03)) & MASK
        return SplitMix64(z).next_u64()
