"""Compare restriction images with the two-condition criterion spaces.

Shows the m=1 equality degree by degree next to the generalized m=2 case,
where the criterion space is strictly larger from degree 2 on.

Usage: python scripts/takiff_image_report.py [--max-degree 8]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dunklinv.liealg import make_sl, takiff_extend
from dunklinv.restriction import CartanFrame, criterion_check, criterion_subspace, image_basis


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=8)
    args = ap.parse_args()

    sl2 = make_sl(2)
    for m in (1, 2):
        frame = CartanFrame(takiff_extend(sl2, m))
        print(f"\nsl2, m = {m}  (variables {', '.join(frame.names)})")
        print(f"{'deg':>4} {'image':>6} {'criterion':>10}  verdict")
        for d in range(args.max_degree + 1):
            image = image_basis(frame, d)
            criterion = criterion_subspace(frame, d)
            verdict = "equal" if image == criterion else "strict"
            print(f"{d:>4} {image.dim:>6} {criterion.dim:>10}  {verdict}")
            if verdict == "strict":
                from dunklinv.linalg import GradedSubspace
                gap = GradedSubspace.from_polynomials(
                    [image.reduce(b) for b in criterion.basis], frame.dim, d)
                for b in gap.basis:
                    print(f"       gap element: {frame.render(b)}")

    frame2 = CartanFrame(takiff_extend(sl2, 2))
    result = criterion_check(frame2, frame2.parse("v^2"))
    print("\nwitness v^2 at m = 2:")
    print(f"  reflection invariance: {result.condition1}")
    print(f"  divisibility:          {result.condition2}")
    print(f"  in restriction image:  {result.in_image}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
