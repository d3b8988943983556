//! Group specifications: a small text grammar and table construction.
//!
//! ```text
//! C<n> | D<order> | Q<order> | SD<order> | S<n> | A<n> | H<p>
//! <factor>x<factor>x...            direct product
//! perm:(1 2)(3 4),(1 2 3)          permutation generators, points from 1
//! ```

use std::fmt;
use std::str::FromStr;

use crate::bitset::MAX_ORDER;
use crate::error::{Error, Result};
use crate::group::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Dihedral group of the given order (not degree).
    Dihedral(usize),
    Quaternion(usize),
    Semidihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Upper unitriangular 3x3 matrices over the field with `p` elements.
    Heisenberg(usize),
    DirectProduct(Vec<GroupSpec>),
    /// Each permutation is a list of cycles over points numbered from 1.
    PermGenerators(Vec<Vec<Vec<usize>>>),
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn two_power_exp(n: usize) -> Option<u32> {
    n.is_power_of_two().then(|| n.trailing_zeros())
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupSpec::Cyclic(0) | GroupSpec::Symmetric(0) | GroupSpec::Alternating(0) => {
                Err(Error::MalformedSpec(self.to_string()))
            }
            GroupSpec::Dihedral(n) if n < 4 || n % 2 == 1 => Err(Error::BadDihedralOrder(n)),
            GroupSpec::Quaternion(n) if !matches!(two_power_exp(n), Some(k) if k >= 3) => {
                Err(Error::BadQuaternionOrder(n))
            }
            GroupSpec::Semidihedral(n) if !matches!(two_power_exp(n), Some(k) if k >= 4) => {
                Err(Error::BadSemidihedralOrder(n))
            }
            GroupSpec::Heisenberg(p) if !is_prime(p) => Err(Error::NotPrime(p)),
            GroupSpec::DirectProduct(ref fs) => {
                if fs.is_empty() {
                    return Err(Error::EmptyProduct);
                }
                fs.iter().try_for_each(GroupSpec::validate)
            }
            GroupSpec::PermGenerators(ref gens) => {
                for cycle in gens.iter().flatten() {
                    let mut sorted = cycle.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    if sorted.len() != cycle.len() || sorted.first() == Some(&0) {
                        return Err(Error::MalformedSpec(self.to_string()));
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Group order, when it follows from the spec alone.
    pub fn order(&self) -> Option<usize> {
        match *self {
            GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Quaternion(n)
            | GroupSpec::Semidihedral(n) => Some(n),
            GroupSpec::Symmetric(n) => (1..=n).try_fold(1usize, |a, k| a.checked_mul(k)),
            GroupSpec::Alternating(n) => {
                let f = (1..=n).try_fold(1usize, |a, k| a.checked_mul(k))?;
                Some(if n >= 2 { f / 2 } else { f })
            }
            GroupSpec::Heisenberg(p) => p.checked_pow(3),
            GroupSpec::DirectProduct(ref fs) => fs.iter().try_fold(1usize, |a, f| a.checked_mul(f.order()?)),
            GroupSpec::PermGenerators(_) => None,
        }
    }

    pub fn is_abelian_family(&self) -> bool {
        match self {
            GroupSpec::Cyclic(_) => true,
            GroupSpec::DirectProduct(fs) => fs.iter().all(GroupSpec::is_abelian_family),
            _ => false,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q{n}"),
            GroupSpec::Semidihedral(n) => write!(f, "SD{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Heisenberg(p) => write!(f, "H{p}"),
            GroupSpec::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::PermGenerators(gens) => {
                let parts: Vec<String> = gens
                    .iter()
                    .map(|cycles| {
                        if cycles.is_empty() {
                            return "()".to_string();
                        }
                        cycles
                            .iter()
                            .map(|c| {
                                let pts: Vec<String> = c.iter().map(ToString::to_string).collect();
                                format!("({})", pts.join(" "))
                            })
                            .collect()
                    })
                    .collect();
                write!(f, "perm:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let text = text.trim();
    let malformed = || Error::MalformedSpec(text.to_string());
    if text.is_empty() {
        return Err(malformed());
    }
    let spec = if let Some(body) = text.strip_prefix("perm:") {
        GroupSpec::PermGenerators(body.split(',').map(parse_permutation).collect::<Option<_>>().ok_or_else(malformed)?)
    } else {
        let tokens: Vec<&str> = text.split('x').map(str::trim).collect();
        if tokens.iter().all(|t| t.is_empty()) {
            return Err(Error::EmptyProduct);
        }
        let mut factors = tokens.into_iter().map(parse_factor).collect::<Result<Vec<_>>>()?;
        if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            GroupSpec::DirectProduct(factors)
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_factor(token: &str) -> Result<GroupSpec> {
    let malformed = || Error::MalformedSpec(token.to_string());
    let split = token.find(|c: char| c.is_ascii_digit()).ok_or_else(malformed)?;
    let (head, digits) = token.split_at(split);
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(malformed());
    }
    let n: usize = digits.parse().map_err(|_| malformed())?;
    let spec = match head {
        "C" => GroupSpec::Cyclic(n),
        "D" => GroupSpec::Dihedral(n),
        "Q" => GroupSpec::Quaternion(n),
        "SD" => GroupSpec::Semidihedral(n),
        "S" => GroupSpec::Symmetric(n),
        "A" => GroupSpec::Alternating(n),
        "H" => GroupSpec::Heisenberg(n),
        _ => return Err(malformed()),
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_permutation(text: &str) -> Option<Vec<Vec<usize>>> {
    let mut rest = text.trim();
    if rest.is_empty() {
        return None;
    }
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(')?;
        let close = body.find(')')?;
        let points = body[..close]
            .split_whitespace()
            .map(|p| p.parse::<usize>().ok().filter(|&x| x >= 1))
            .collect::<Option<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body[close + 1..].trim_start();
    }
    Some(cycles)
}

/// Metacyclic group `<g, h | g^m, h^2 = g^c, h g h^-1 = g^r>`, elements `g^i h^j`
/// stored at index `i + m*j`.
fn metacyclic(m: usize, r: usize, c: usize) -> Result<GroupTable> {
    let split = |x: usize| (x % m, x / m);
    GroupTable::from_fn(2 * m, |x, y| {
        let (i, a) = split(x);
        let (k, b) = split(y);
        let twisted = if a == 1 { k * r % m } else { k };
        let mut e = i + twisted;
        let mut j = a + b;
        if j == 2 {
            e += c;
            j = 0;
        }
        e % m + m * j
    })
}

fn permutation_from_cycles(cycles: &[Vec<usize>]) -> Vec<usize> {
    let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
    let mut p: Vec<usize> = (0..degree).collect();
    for c in cycles {
        for (i, &x) in c.iter().enumerate() {
            p[x - 1] = c[(i + 1) % c.len()] - 1;
        }
    }
    p
}

/// Builds the multiplication table for a validated spec.
pub fn build_group(spec: &GroupSpec) -> Result<GroupTable> {
    spec.validate()?;
    if let Some(n) = spec.order() {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
    } else if !matches!(spec, GroupSpec::PermGenerators(_)) {
        return Err(Error::OrderTooLarge(usize::MAX));
    }
    match *spec {
        GroupSpec::Cyclic(n) => GroupTable::from_fn(n, |a, b| (a + b) % n),
        GroupSpec::Dihedral(n) => {
            let m = n / 2;
            metacyclic(m, m - 1, 0)
        }
        GroupSpec::Quaternion(n) => {
            let m = n / 2;
            metacyclic(m, m - 1, m / 2)
        }
        GroupSpec::Semidihedral(n) => {
            let m = n / 2;
            metacyclic(m, m / 2 - 1, 0)
        }
        GroupSpec::Symmetric(n) => {
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(permutation_from_cycles(&[vec![1, 2]]));
            }
            if n >= 3 {
                gens.push(permutation_from_cycles(&[(1..=n).collect()]));
            }
            GroupTable::from_permutations(&gens)
        }
        GroupSpec::Alternating(n) => {
            let gens: Vec<Vec<usize>> = (3..=n).map(|k| permutation_from_cycles(&[vec![1, 2, k]])).collect();
            GroupTable::from_permutations(&gens)
        }
        GroupSpec::Heisenberg(p) => {
            let split = |x: usize| (x % p, x / p % p, x / (p * p));
            GroupTable::from_fn(p * p * p, |x, y| {
                let (a, b, c) = split(x);
                let (a2, b2, c2) = split(y);
                (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
            })
        }
        GroupSpec::DirectProduct(ref fs) => {
            let tables = fs.iter().map(build_group).collect::<Result<Vec<_>>>()?;
            let total = tables.iter().map(GroupTable::order).product();
            GroupTable::from_fn(total, |mut x, mut y| {
                let mut out = 0;
                let mut stride = 1;
                for t in &tables {
                    let n = t.order();
                    out += stride * t.mul(x % n, y % n);
                    stride *= n;
                    x /= n;
                    y /= n;
                }
                out
            })
        }
        GroupSpec::PermGenerators(ref gens) => {
            let perms: Vec<Vec<usize>> = gens.iter().map(|c| permutation_from_cycles(c)).collect();
            GroupTable::from_permutations(&perms)
        }
    }
}
