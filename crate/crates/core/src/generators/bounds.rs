use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;

/// `h(k, l) = C(k+2l-1, k) - C(k+l-1, k)`, the number of reference
/// algorithms of the cluster adversary and its deterministic lower bound.
pub fn det_lb_value(k: usize, l: usize) -> u128 {
    assert!(k >= 1 && l >= 1, "k and l must be positive");
    let (k, l) = (k as u128, l as u128);
    binomial(k + 2 * l - 1, k) - binomial(k + l - 1, k)
}

/// `C(k+l, l) - 1`: most faults the hitting set algorithm takes in a phase
/// on a uniform space.
pub fn phase_fault_bound(k: usize, l: usize) -> u128 {
    assert!(k >= 1 && l >= 1, "k and l must be positive");
    binomial((k + l) as u128, l as u128) - 1
}

/// All ways to write `k` as an ordered sum of `l` nonnegative parts, in
/// lexicographic order.
pub fn compositions(k: usize, l: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 0..=left {
            cur.push(first);
            rec(left - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        rec(k, l, &mut Vec::with_capacity(l), &mut out);
    }
    out
}

/// `g(kappa) = prod (k_i + 1) - 1`.
pub fn g_kappa(kappa: &[usize]) -> u128 {
    kappa.iter().map(|&x| x as u128 + 1).product::<u128>() - 1
}

/// `H(n) = 1 + 1/2 + ... + 1/n`, exactly.
pub fn harmonic_number(n: usize) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, i| acc + BigRational::new(1.into(), i.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        assert_eq!(det_lb_value(2, 2), 7);
        for l in 1..6 {
            assert_eq!(det_lb_value(1, l), l as u128);
            assert_eq!(phase_fault_bound(1, l), l as u128);
        }
        for k in 1..6 {
            assert_eq!(det_lb_value(k, 1), k as u128);
            assert_eq!(phase_fault_bound(k, 1), k as u128);
        }
        assert_eq!(phase_fault_bound(2, 2), 5);
    }

    #[test]
    fn reference_count_matches_closed_form() {
        for k in 1..6 {
            for l in 1..5 {
                let sum: u128 = compositions(k, l).iter().map(|c| g_kappa(c)).sum();
                assert_eq!(sum, det_lb_value(k, l), "k={k} l={l}");
                assert_eq!(compositions(k, l).len() as u128, binomial((k + l - 1) as u128, k as u128));
            }
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic_number(4), BigRational::new(25.into(), 12.into()));
        assert!(harmonic_number(0).is_zero());
    }
}
