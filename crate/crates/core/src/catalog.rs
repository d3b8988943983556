//! The built-in sweep catalog, generated from the order bound.

use crate::spec::GroupSpec;

fn invariant_factor_lists(max_order: usize) -> Vec<Vec<usize>> {
    // n1 >= n2 >= n3 >= 2 with n_{i+1} | n_i
    let mut out = Vec::new();
    for n1 in 2..=max_order {
        out.push(vec![n1]);
        for n2 in (2..=n1).filter(|d| n1 % d == 0 && n1 * d <= max_order) {
            out.push(vec![n1, n2]);
            for n3 in (2..=n2).filter(|d| n2 % d == 0 && n1 * n2 * d <= max_order) {
                out.push(vec![n1, n2, n3]);
            }
        }
    }
    out
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Every abelian group with at most three invariant factors, dihedral groups
/// of every even order from 6, quaternion and semidihedral groups at each
/// admissible power of two, `S3`, `S4`, `A4` and the odd Heisenberg groups,
/// all of order at most `max_order`, sorted by `(order, name)`.
pub fn default_catalog(max_order: usize) -> Vec<GroupSpec> {
    let mut specs = vec![GroupSpec::Cyclic(1)];
    for factors in invariant_factor_lists(max_order) {
        let mut cs: Vec<GroupSpec> = factors.into_iter().map(GroupSpec::Cyclic).collect();
        specs.push(if cs.len() == 1 { cs.pop().unwrap() } else { GroupSpec::DirectProduct(cs) });
    }
    specs.extend((6..=max_order).step_by(2).map(GroupSpec::Dihedral));
    let mut n = 8;
    while n <= max_order {
        specs.push(GroupSpec::Quaternion(n));
        if n >= 16 {
            specs.push(GroupSpec::Semidihedral(n));
        }
        n *= 2;
    }
    specs.extend([GroupSpec::Symmetric(3), GroupSpec::Symmetric(4), GroupSpec::Alternating(4)]);
    specs.extend((3..).take_while(|p| p * p * p <= max_order).filter(|&p| is_prime(p)).map(GroupSpec::Heisenberg));
    specs.retain(|s| s.order().is_some_and(|o| o <= max_order));
    specs.sort_by_cached_key(|s| (s.order(), s.to_string()));
    specs
}
