"""Is a longer series fairer?

Subtract the shorter format's win polynomial from the longer one's, fix r,
and look at the extremes of the difference on [0, 1].
"""
import numpy as np

from seriesfair import R_PAPER, SeriesFormat, difference_function, fairness_verdict

five, three, seven = SeriesFormat.two_three(), SeriesFormat.one_one_one(), SeriesFormat.two_three_two()

f = difference_function(five, three)
print("f(p) =", f.to_text())
print("f'(p) =", f.derivative_p().to_text())

report = fairness_verdict(five, three, R_PAPER)
print(report.to_text())

report = fairness_verdict(seven, five, R_PAPER)
print(report.to_text())

# A coarse table of the seven-vs-five difference.
s = report.difference_poly.fix_r(R_PAPER)
for p in np.arange(0.3, 0.81, 0.1):
    print(f"p={p:.1f}  s(p)={s(p):+.6f}")

# Changing r moves the crossover and the extremes, but not the verdict here.
for r in (0.8, 0.9, 1.0):
    rep = fairness_verdict(seven, five, r)
    print(f"r={r}: max={rep.max_advantage:.6f} crossover={rep.crossover_in_01:.6f} significant={rep.significant}")
