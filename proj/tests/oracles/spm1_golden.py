"""Independent reference for SPM1 position files.

Recomputes sealed bytes from the format description with hashlib so the C++
golden tests do not depend on the implementation they check.
"""
import hashlib
import struct
import sys

MASK = (1 << 64) - 1


def splitmix64(seed):
    state = seed
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        yield z ^ (z >> 31)


def salt_from_seed(seed):
    gen = splitmix64(seed)
    return struct.pack("<QQ", next(gen), next(gen))


def seal(positions, key, width, height, name_length, seed):
    salt = salt_from_seed(seed)
    header = b"SPM1" + struct.pack(">BIIBHI", 1, width, height, 0, name_length, len(positions))
    verifier = hashlib.sha256(salt + key).digest()[:16]
    plain = b"".join(struct.pack(">I", p) for p in positions)
    stream = b""
    counter = 0
    while len(stream) < len(plain):
        stream += hashlib.sha256(salt + key + struct.pack(">I", counter)).digest()
        counter += 1
    payload = bytes(a ^ b for a, b in zip(plain, stream))
    return header + salt + verifier + payload


CASES = {
    "empty": ([], b"k", 64, 64, 0, 42),
    "fourteen": ([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43], b"secret", 4, 4, 1, 7),
}

if __name__ == "__main__":
    for name, args in CASES.items():
        data = seal(*args)
        print(name, len(data))
        print(data.hex())
    sys.exit(0)
