"""Monte-Carlo cover comparison: hit ratios and the baseline comparison table.

Samples rate constants uniformly from (0, 1]^12, keeps the case-4 points, and
tests all 16 cover certificates on each sample.  At the default 200k samples
this takes about a second; raise N for tighter error bars (the published-scale
numbers use 10^6 or more).
"""

from hexcover import SamplePlan, binomial_sigma, compare_vs_baseline, evaluate_covers

N = 200_000
plan = SamplePlan(box_size=1.0, target_case4_samples=N, seed=42, threads=4)
matrix = evaluate_covers(plan)

sigma = binomial_sigma(float(matrix.ratios.max()), N)
print(f"{N} accepted case-4 samples out of {matrix.raw_draws} raw draws "
      f"(acceptance {N / matrix.raw_draws:.1%}); one-ratio sigma ~ {sigma:.5f}\n")

print("cover hit ratios (fraction of samples certified):")
print(f"  union {matrix.union_ratio:.5f}")
order = sorted(range(1, 17), key=lambda cid: -matrix.ratios[cid - 1])
for cid in order:
    print(f"  CC({cid:>2}) {matrix.ratios[cid - 1]:.5f}")

# Per-sample comparison against the reference cover CC(9): '+' counts samples
# certified by the cover but not by CC(9), '-' the reverse, '0' neither.
print("\nversus CC(9), in percent of samples:")
print("  cover     +      -      0")
for rec in compare_vs_baseline(matrix, baseline=9):
    print(f"  CC({rec.cover_id:>2}) {100 * rec.plus / N:6.2f} "
          f"{100 * rec.minus / N:6.2f} {100 * rec.zero / N:6.2f}")
