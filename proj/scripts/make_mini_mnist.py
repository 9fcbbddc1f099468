#!/usr/bin/env python3
"""Regenerate data/mnist-mini from the `mnist` npm package (MIT licensed).

The npm package (https://www.npmjs.com/package/mnist) bundles 10,000 real
MNIST digits (~1,000 per class) as JSON arrays of 784 floats in [0, 1].
This script converts them into the four canonical IDX files, split into
a disjoint 8,000-image training pool and 2,000-image test pool.

Usage:
    npm pack mnist && tar xzf mnist-*.tgz
    python3 scripts/make_mini_mnist.py package/src/digits data/mnist-mini
"""
import gzip
import json
import random
import struct
import sys
from pathlib import Path


def write_idx_images(path: Path, images: list) -> None:
    with gzip.open(path, "wb", compresslevel=9) as f:
        f.write(struct.pack(">iiii", 0x00000803, len(images), 28, 28))
        for img in images:
            f.write(bytes(min(255, max(0, round(v * 255))) for v in img))


def write_idx_labels(path: Path, labels: list) -> None:
    with gzip.open(path, "wb", compresslevel=9) as f:
        f.write(struct.pack(">ii", 0x00000801, len(labels)))
        f.write(bytes(labels))


def main() -> None:
    digits_dir = Path(sys.argv[1])
    out_dir = Path(sys.argv[2])
    out_dir.mkdir(parents=True, exist_ok=True)

    samples = []
    for d in range(10):
        data = json.loads((digits_dir / f"{d}.json").read_text())["data"]
        assert len(data) % 784 == 0
        for i in range(len(data) // 784):
            samples.append((data[784 * i : 784 * (i + 1)], d))

    random.Random(12345).shuffle(samples)
    train, test = samples[:8000], samples[8000:]

    write_idx_images(out_dir / "train-images-idx3-ubyte.gz", [s[0] for s in train])
    write_idx_labels(out_dir / "train-labels-idx1-ubyte.gz", [s[1] for s in train])
    write_idx_images(out_dir / "t10k-images-idx3-ubyte.gz", [s[0] for s in test])
    write_idx_labels(out_dir / "t10k-labels-idx1-ubyte.gz", [s[1] for s in test])
    print(f"wrote {len(train)} train / {len(test)} test samples to {out_dir}")


if __name__ == "__main__":
    main()
