"""SplitMix64: a tiny, fully specified 64-bit generator.

Used everywhere randomness enters (entry shuffling, search moves) so that
results are reproducible bit-for-bit on any platform and in any language
that implements the same recurrence::

    state += 0x9E3779B97F4A7C15                      (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9          (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB          (mod 2**64)
    return z ^ (z >> 31)

Bounded integers use rejection sampling on the raw 64-bit output: with
``limit = 2**64 - (2**64 % n)`` draw until ``x < limit`` and return
``x % n``.
"""

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(z):
    """The SplitMix64 finalizer, a bijection on 64-bit integers."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed=0):
        self.state = int(seed) & MASK64

    @classmethod
    def for_stream(cls, seed, index):
        """Independent generator for sub-stream ``index`` of ``seed``.

        The starting state is ``mix64(mix64(seed) + index)``. Scrambling the
        seed first keeps the streams of nearby seeds apart: with a plain
        ``seed + index``, seed 1 restart 5 would repeat seed 2 restart 4.
        """
        return cls(mix64((mix64(int(seed)) + int(index)) & MASK64))

    def next_u64(self):
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def randbelow(self, n):
        """Uniform integer in ``[0, n)``."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def random(self):
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items):
        """In-place Fisher-Yates shuffle, walking from the end."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def sample(self, population, m):
        """``m`` distinct items via a partial Fisher-Yates from the front."""
        pool = list(population)
        if not 0 <= m <= len(pool):
            raise ValueError("sample size out of range")
        for i in range(m):
            j = i + self.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:m]
