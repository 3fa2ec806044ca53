#!/usr/bin/env python3
"""Independent evaluation of the embedded-prime count expression.

160n - 301 + 16d + n(n-1) + 31 * sum_{j=1}^{n-3} d^(2^j)
  + sum_{j=1}^{n-3} (n - j) d^(2^j) + 18 d^(2^(n-2))
"""
import sys


def count(n, d):
    total = 160 * n - 301 + 16 * d + n * (n - 1)
    total += 31 * sum(d ** (2 ** j) for j in range(1, n - 2))
    total += sum((n - j) * d ** (2 ** j) for j in range(1, n - 2))
    total += 18 * d ** (2 ** (n - 2))
    return total


if __name__ == "__main__":
    for n, d in [(3, 2), (4, 2), (3, 3), (4, 3), (5, 2)]:
        print(n, d, count(n, d))
