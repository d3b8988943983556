//! Table of marks, ghost ring embedding and exact membership in the Burnside ring.
//!
//! Rows of the mark table are the transitive G-sets `[G/V]`, columns are the
//! mark homomorphisms `U -> |X^U|`, both in lattice class order. With classes
//! sorted by order the table is lower triangular, so membership of a ghost
//! vector is a single back-substitution from the class of `G` downwards.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::SubgroupLattice;
use crate::ratio::Ratio;
use crate::subgroup::coset_reps;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MarkTable {
    pub n: usize,
    /// `m[v][u]` is the number of points of `G/V_v` fixed by `U_u`.
    pub m: Vec<Vec<i64>>,
}

/// Ghost ring coordinates, one integer per subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GhostVector(pub Vec<i64>);

/// Coefficients over the transitive basis `[G/V]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BurnsideElement(pub Vec<i64>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Integral(BurnsideElement),
    /// The first class, in solve order, with a fractional coefficient.
    NotIntegral { class: usize, denominator: i128 },
}

impl Membership {
    pub fn is_integral(&self) -> bool {
        matches!(self, Membership::Integral(_))
    }
}

/// `#{gV : g^-1 U g <= V}` for the representatives of classes `u` and `v`.
pub fn mark(group: &GroupTable, lattice: &SubgroupLattice, u: usize, v: usize) -> i64 {
    if !lattice.is_subconjugate(u, v) {
        return 0;
    }
    let big = &lattice.class(v).representative.members;
    let small = &lattice.class(u).representative.members;
    coset_reps(group, &group.elements(), big)
        .into_iter()
        .filter(|&g| small.iter().all(|x| big.contains(group.conjugate(x, g))))
        .count() as i64
}

pub fn build_mark_table(group: &GroupTable, lattice: &SubgroupLattice) -> MarkTable {
    let n = lattice.len();
    let m = (0..n)
        .into_par_iter()
        .map(|v| (0..n).map(|u| if u <= v { mark(group, lattice, u, v) } else { 0 }).collect())
        .collect();
    MarkTable { n, m }
}

impl MarkTable {
    pub fn ghost_of(&self, x: &BurnsideElement) -> GhostVector {
        ghost_of(self, x)
    }

    pub fn basis(&self, v: usize) -> BurnsideElement {
        let mut c = vec![0; self.n];
        c[v] = 1;
        BurnsideElement(c)
    }
}

pub fn ghost_of(table: &MarkTable, x: &BurnsideElement) -> GhostVector {
    assert_eq!(x.0.len(), table.n, "dimension mismatch");
    let values = (0..table.n)
        .map(|u| {
            x.0.iter()
                .zip(&table.m)
                .try_fold(0i64, |acc, (&c, row)| acc.checked_add(c.checked_mul(row[u])?))
                .expect("ghost coordinate overflow")
        })
        .collect();
    GhostVector(values)
}

/// Exact rational coefficients `x` with `ghost_of(x) = target`.
pub fn solve_rational(table: &MarkTable, target: &GhostVector) -> Result<Vec<Ratio>> {
    if target.0.len() != table.n {
        return Err(Error::Precondition("ghost vector length does not match the table".into()));
    }
    let mut x = vec![Ratio::ZERO; table.n];
    for u in (0..table.n).rev() {
        let diag = table.m[u][u];
        if diag == 0 {
            return Err(Error::Precondition(format!("zero diagonal mark at class {u}")));
        }
        let mut rest = Ratio::from_int(target.0[u] as i128);
        for v in u + 1..table.n {
            let mv = table.m[v][u];
            if mv != 0 {
                rest = rest.checked_sub(x[v].checked_mul_int(mv as i128)?)?;
            }
        }
        x[u] = rest.checked_div_int(diag as i128)?;
    }
    Ok(x)
}

/// Decides whether `target` lies in the image of the Burnside ring.
pub fn solve_membership(table: &MarkTable, target: &GhostVector) -> Result<Membership> {
    let x = solve_rational(table, target)?;
    if let Some(u) = (0..table.n).rev().find(|&u| !x[u].is_integer()) {
        return Ok(Membership::NotIntegral { class: u, denominator: x[u].denom() });
    }
    Ok(Membership::Integral(BurnsideElement(x.iter().map(|r| r.numer() as i64).collect())))
}

fn lcm(a: i128, b: i128) -> Result<i128> {
    (a / crate::ratio::gcd_i128(a, b)).checked_mul(b).ok_or(Error::Overflow)
}

/// Least `n >= 1` with `n` times every ghost ring unit vector in the Burnside ring.
pub fn conductor(table: &MarkTable) -> Result<u64> {
    let mut acc = 1i128;
    for u in 0..table.n {
        let mut e = vec![0; table.n];
        e[u] = 1;
        for r in solve_rational(table, &GhostVector(e))? {
            acc = lcm(acc, r.denom())?;
        }
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

struct CosetAction {
    reps: Vec<usize>,
    id: Vec<usize>,
}

impl CosetAction {
    fn new(group: &GroupTable, sub: &ElemSet) -> Self {
        let reps = coset_reps(group, &group.elements(), sub);
        let mut id = vec![0; group.order()];
        for (i, &r) in reps.iter().enumerate() {
            for x in sub.iter() {
                id[group.mul(r, x)] = i;
            }
        }
        CosetAction { reps, id }
    }

    #[inline]
    fn act(&self, group: &GroupTable, g: usize, coset: usize) -> usize {
        self.id[group.mul(g, self.reps[coset])]
    }
}

/// Decomposes `(G/U) x (G/V)` into transitive orbits by walking the orbits of
/// the diagonal action and identifying each point stabilizer's class.
pub fn multiply_basis(group: &GroupTable, lattice: &SubgroupLattice, u: usize, v: usize) -> Result<BurnsideElement> {
    lattice.check_class_index(u)?;
    lattice.check_class_index(v)?;
    let left = CosetAction::new(group, &lattice.class(u).representative.members);
    let right = CosetAction::new(group, &lattice.class(v).representative.members);
    let (nl, nr) = (left.reps.len(), right.reps.len());
    let gens = group.generators();

    let mut coeffs = vec![0i64; lattice.len()];
    let mut seen = vec![false; nl * nr];
    for start in 0..nl * nr {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            let (i, j) = (p / nr, p % nr);
            for &g in &gens {
                let q = left.act(group, g, i) * nr + right.act(group, g, j);
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        let (i, j) = (start / nr, start % nr);
        let stab: ElemSet =
            (0..group.order()).filter(|&g| left.act(group, g, i) == i && right.act(group, g, j) == j).collect();
        let class = lattice.class_of(&stab).ok_or(Error::NotASubgroup)?;
        coeffs[class] += 1;
    }
    Ok(BurnsideElement(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_subgroups;
    use crate::spec::{build_group, parse_group_spec};

    fn setup(s: &str) -> (GroupTable, SubgroupLattice, MarkTable) {
        let g = build_group(&parse_group_spec(s).unwrap()).unwrap();
        let l = enumerate_subgroups(&g).unwrap();
        let t = build_mark_table(&g, &l);
        (g, l, t)
    }

    #[test]
    fn small_tables() {
        assert_eq!(setup("C2").2.m, vec![vec![2, 0], vec![1, 1]]);
        assert_eq!(
            setup("S3").2.m,
            vec![vec![6, 0, 0, 0], vec![3, 1, 0, 0], vec![2, 0, 2, 0], vec![1, 1, 1, 1]]
        );
        assert_eq!(setup("C1").2.m, vec![vec![1]]);
    }

    #[test]
    fn mark_examples() {
        let (g, l, _) = setup("Q8");
        // a C4 class
        assert_eq!(mark(&g, &l, 2, 2), 2);
        assert_eq!(mark(&g, &l, 0, 2), 2);
        let (g, l, _) = setup("S3");
        assert_eq!(mark(&g, &l, 1, 2), 0);
    }

    #[test]
    fn ghost_examples() {
        let (_, _, t) = setup("C2");
        assert_eq!(t.ghost_of(&t.basis(1)), GhostVector(vec![1, 1]));
        assert_eq!(t.ghost_of(&t.basis(0)), GhostVector(vec![2, 0]));
        let (_, _, t) = setup("S3");
        assert_eq!(t.ghost_of(&BurnsideElement(vec![0, 1, 0, -1])), GhostVector(vec![2, 0, -1, -1]));
    }

    #[test]
    fn membership_examples() {
        let (_, _, t) = setup("S3");
        assert_eq!(
            solve_membership(&t, &GhostVector(vec![1, 1, 1, 0])).unwrap(),
            Membership::NotIntegral { class: 2, denominator: 2 }
        );
        assert_eq!(
            solve_membership(&t, &GhostVector(vec![2, 2, 2, 0])).unwrap(),
            Membership::Integral(BurnsideElement(vec![-1, 2, 1, 0]))
        );
        for v in 0..4 {
            assert_eq!(solve_membership(&t, &t.ghost_of(&t.basis(v))).unwrap(), Membership::Integral(t.basis(v)));
        }
        assert!(solve_membership(&t, &GhostVector(vec![1])).is_err());
    }

    #[test]
    fn conductor_examples() {
        assert_eq!(conductor(&setup("C4").2).unwrap(), 4);
        assert_eq!(conductor(&setup("S3").2).unwrap(), 6);
        assert_eq!(conductor(&setup("C1").2).unwrap(), 1);
    }

    #[test]
    fn product_examples() {
        let (g, l, t) = setup("S3");
        let top = l.len() - 1;
        for v in 0..l.len() {
            assert_eq!(multiply_basis(&g, &l, top, v).unwrap(), t.basis(v));
            let index = 6 / l.class(v).order() as i64;
            let mut free = vec![0; l.len()];
            free[0] = index;
            assert_eq!(multiply_basis(&g, &l, 0, v).unwrap(), BurnsideElement(free));
        }
        let (g, l, _) = setup("C2");
        assert_eq!(multiply_basis(&g, &l, 0, 0).unwrap(), BurnsideElement(vec![2, 0]));
        assert!(multiply_basis(&g, &l, 0, 7).is_err());
    }

    #[test]
    fn solve_reports_zero_diagonal() {
        let t = MarkTable { n: 2, m: vec![vec![1, 0], vec![1, 0]] };
        assert!(matches!(solve_rational(&t, &GhostVector(vec![1, 1])), Err(Error::Precondition(_))));
    }
}
