//! Monomial ideals kept in canonical form: the unique minimal monomial
//! generating set, sorted in graded lexicographic order.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Candidate counts above this are generated and filtered in parallel.
const PAR_THRESHOLD: usize = 4096;

/// A monomial ideal in `n` variables.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
/// Because minimal monomial generating sets are unique, structural equality
/// of two values is ideal equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn principal(f: Monomial) -> Self {
        Self {
            n: f.n(),
            gens: vec![f],
        }
    }

    /// Minimalizes an arbitrary generating set. Empty input gives the zero ideal.
    pub fn minimalize<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: bad.n(),
            });
        }
        Ok(Self {
            n,
            gens: minimal_antichain(gens),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    /// Smallest degree of a nonzero element.
    pub fn alpha(&self) -> Result<u64> {
        // canonical order is degree ascending
        self.gens
            .first()
            .map(Monomial::degree)
            .ok_or(Error::AlphaUndefined)
    }

    /// Distinct generator degrees, ascending.
    pub fn degrees(&self) -> Vec<u64> {
        let mut d: Vec<u64> = self.gens.iter().map(Monomial::degree).collect();
        d.dedup();
        d
    }

    fn check_same_n(&self, n: usize) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.n,
                right: n,
            })
        }
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_same_n(m.n())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        let deg = m.degree();
        self.gens
            .iter()
            .take_while(|g| g.degree() <= deg)
            .any(|g| g.divides_unchecked(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        other.check_same_n(self.n)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other.n)?;
        Ok(Self {
            n: self.n,
            gens: minimal_antichain(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other.n)?;
        let products = pairwise(&self.gens, &other.gens, |a, b| a.mul_unchecked(b))?;
        Ok(Self {
            n: self.n,
            gens: minimal_antichain(products),
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other.n)?;
        let lcms = pairwise(&self.gens, &other.gens, |a, b| Ok(a.lcm_unchecked(b)))?;
        Ok(Self {
            n: self.n,
            gens: minimal_antichain(lcms),
        })
    }

    /// Intersection of a sequence of ideals, folded left to right.
    /// The empty intersection is the unit ideal.
    pub fn intersect_all<'a, I>(n: usize, ideals: I) -> Result<MonomialIdeal>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        ideals
            .into_iter()
            .try_fold(MonomialIdeal::unit(n), |acc, j| acc.intersect(j))
    }

    /// Ordinary power; `power(0)` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        self.power_capped(k, usize::MAX)
    }

    /// Ordinary power by repeated multiplication, failing once any
    /// intermediate power exceeds `cap` minimal generators.
    pub fn power_capped(&self, k: u32, cap: usize) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.multiply(self)?;
            check_cap("generators of an ordinary power", acc.mu(), cap)?;
        }
        Ok(acc)
    }

    /// `[I^0, I^1, ..., I^k]`, each checked against `cap`.
    pub fn powers_up_to(&self, k: u32, cap: usize) -> Result<Vec<MonomialIdeal>> {
        let mut out = Vec::with_capacity(k as usize + 1);
        out.push(MonomialIdeal::unit(self.n));
        for i in 0..k as usize {
            let next = out[i].multiply(self)?;
            check_cap("generators of an ordinary power", next.mu(), cap)?;
            out.push(next);
        }
        Ok(out)
    }
}

pub(crate) fn check_cap(what: &'static str, count: usize, cap: usize) -> Result<()> {
    if count > cap {
        Err(Error::ResourceCap { what, count, cap })
    } else {
        Ok(())
    }
}

fn pairwise<F>(a: &[Monomial], b: &[Monomial], op: F) -> Result<Vec<Monomial>>
where
    F: Fn(&Monomial, &Monomial) -> Result<Monomial> + Sync,
{
    if a.len().saturating_mul(b.len()) > PAR_THRESHOLD {
        a.par_iter()
            .flat_map_iter(|x| b.iter().map(|y| op(x, y)).collect::<Vec<_>>())
            .collect()
    } else {
        a.iter()
            .flat_map(|x| b.iter().map(|y| op(x, y)).collect::<Vec<_>>())
            .collect()
    }
}

/// Reduces `gens` to the inclusion-minimal antichain under divisibility,
/// returned in canonical order.
///
/// Candidates are processed one degree layer at a time: a proper divisor
/// always has strictly smaller degree, so each layer only needs to be
/// filtered against the generators already kept.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    if gens.len() > PAR_THRESHOLD {
        gens.par_sort_unstable();
    } else {
        gens.sort_unstable();
    }
    gens.dedup();

    let mut kept: Vec<Monomial> = Vec::new();
    let mut kept_masks: Vec<u64> = Vec::new();
    let mut start = 0;
    while start < gens.len() {
        let deg = gens[start].degree();
        let end = start + gens[start..].partition_point(|g| g.degree() == deg);
        let layer = &gens[start..end];
        let survives = |g: &Monomial| {
            let mask = g.div_mask();
            !kept
                .iter()
                .zip(&kept_masks)
                .any(|(k, &km)| km & !mask == 0 && k.divides_unchecked(g))
        };
        let survivors: Vec<Monomial> = if layer.len() * kept.len().max(1) > PAR_THRESHOLD {
            layer.par_iter().filter(|g| survives(g)).cloned().collect()
        } else {
            layer.iter().filter(|g| survives(g)).cloned().collect()
        };
        kept_masks.extend(survivors.iter().map(Monomial::div_mask));
        kept.extend(survivors);
        start = end;
    }
    kept
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|e| m(e))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(2, &[&[1, 0], &[1, 1], &[0, 2]]);
        assert_eq!(i.gens(), &[m(&[1, 0]), m(&[0, 2])]);
        assert!(MonomialIdeal::minimalize(3, Vec::new()).unwrap().is_zero());
        let k3 = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(k3.mu(), 3);
        assert!(MonomialIdeal::minimalize(2, vec![m(&[1])]).is_err());
    }

    #[test]
    fn contains_examples() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        assert!(i.contains(&m(&[1, 0, 1])).unwrap());
        let j = ideal(2, &[&[1, 1]]);
        assert!(!j.contains(&m(&[1, 0])).unwrap());
        assert!(!MonomialIdeal::zero(2).contains(&m(&[3, 3])).unwrap());
    }

    #[test]
    fn power_examples() {
        let i = ideal(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(i.power(2).unwrap().gens(), &[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
        assert_eq!(i.power(0).unwrap(), MonomialIdeal::unit(2));
        assert_eq!(i.multiply(&MonomialIdeal::unit(2)).unwrap(), i);
    }

    #[test]
    fn power_of_triangle_cover_ideal() {
        let j = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let sq = j.power(2).unwrap();
        // all six pairwise products have degree 4, none divides another
        let expected = ideal(
            3,
            &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2], &[2, 1, 1], &[1, 2, 1], &[1, 1, 2]],
        );
        assert_eq!(sq, expected);
        assert_eq!(sq.mu(), 6);
    }

    #[test]
    fn intersect_examples() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(x1.intersect(&MonomialIdeal::unit(2)).unwrap(), x1);
        let a = ideal(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(3, &[&[1, 0, 0], &[0, 1, 1]]));
    }

    #[test]
    fn alpha_and_mu() {
        assert_eq!(MonomialIdeal::unit(4).alpha(), Ok(0));
        assert_eq!(MonomialIdeal::zero(4).alpha(), Err(Error::AlphaUndefined));
        assert_eq!(MonomialIdeal::zero(4).mu(), 0);
    }

    #[test]
    fn power_cap_is_enforced() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(matches!(
            i.power_capped(4, 10),
            Err(Error::ResourceCap { cap: 10, .. })
        ));
    }

    #[test]
    fn independent_generators_give_binomial_mu() {
        // x1x2, x3x4, x5: three algebraically independent generators
        let i = ideal(5, &[&[1, 1, 0, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 0, 1]]);
        for k in 0..6u32 {
            let expected = ((k + 1) * (k + 2) / 2) as usize;
            assert_eq!(i.power(k).unwrap().mu(), expected);
        }
    }
}
