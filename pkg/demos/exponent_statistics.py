"""Empirics behind the exponent machinery.

Shows the cut-set rate ceiling converging to the rate level of the sampled
eigenvalue exponents as SNR grows, the support inequalities becoming binding,
and the two relay-hop eigenvalues decorrelating once the direct-link
eigenvalue is conditioned on finely enough.
"""

import math

import numpy as np

from relaydmt import (
    AntennaConfig,
    channel_rng,
    conditional_independence_check,
    cutset_terms,
    eigen_exponents,
    in_support,
    rate_exponent,
    rate_upper,
    sample_channel,
)


def main():
    config = AntennaConfig(1, 1, 1)
    n_samples = 4000

    print("=== rate ceiling vs exponent rate level ===\n")
    print("      rho    median |R/log2(rho) - level|   support violations")
    for rho in (1e2, 1e4, 1e6, 1e8):
        rng = channel_rng(42)
        devs = []
        violations = 0
        for _ in range(n_samples):
            s = sample_channel(config, rng)
            t = eigen_exponents(s, rho)
            devs.append(
                abs(rate_upper(cutset_terms(s, rho)) / math.log2(rho) - rate_exponent(t))
            )
            violations += not in_support(config, t, slack=0.1)
        print(
            f"  {rho:9.0e}        {np.median(devs):.4f}"
            f"                      {violations / n_samples:6.1%}"
        )
    print("\nboth columns shrink with SNR: the finite-SNR rate ceiling and the")
    print("support inequalities are asymptotic statements.\n")

    print("=== conditional decorrelation of the two relay hops ===\n")
    print("  samples    bins    max within-bin |corr|    shuffled control")
    for n, bins in [(100_000, 20), (1_000_000, 200)]:
        rep = conditional_independence_check(config, 100.0, n, bins, seed=7)
        print(
            f"  {n:8d}    {rep.n_bins:4d}          {rep.max_abs_corr:.4f}"
            f"               {rep.control_max_abs_corr:.4f}"
        )
    rep = conditional_independence_check(config, 100.0, 100_000, 20, seed=7)
    print(f"\nunconditional correlation of the two hops: {rep.unconditional_corr:.3f}")
    print("coarse bins leave residual correlation in the extreme bins (the")
    print("shared 1/(1+rho*lambda) factor still varies inside them); thin bins")
    print("push the paired statistic down to the shuffled-control noise floor.")


if __name__ == "__main__":
    main()
