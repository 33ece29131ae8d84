//! Counting series for unlabeled trees.
//!
//! Rooted trees satisfy `r = x h[r]` and S-trees (no vertex with exactly one
//! child) satisfy `s = x (h[s] - s)`. Both right-hand sides carry a leading
//! `x`, so the coefficient of `x^{n+1}` only depends on coefficients up to
//! `x^n` and the solvers fill the series one degree at a time. Unrooted
//! families then follow from the dissymmetry identity
//! `t = t_vertex + t_edge - t_vertex_edge`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::multiset::{h2, EulerTransform};
use crate::scalar::Scalar;
use crate::series::PowerSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeFamily {
    Rooted,
    Unrooted,
    STree,
    Hit,
    HitVertexRooted,
    HitEdgeRooted,
    HitVertexEdgeRooted,
}

impl TreeFamily {
    pub const ALL: [TreeFamily; 7] = [
        TreeFamily::Rooted,
        TreeFamily::Unrooted,
        TreeFamily::STree,
        TreeFamily::Hit,
        TreeFamily::HitVertexRooted,
        TreeFamily::HitEdgeRooted,
        TreeFamily::HitVertexEdgeRooted,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TreeFamily::Rooted => "rooted",
            TreeFamily::Unrooted => "unrooted",
            TreeFamily::STree => "stree",
            TreeFamily::Hit => "hit",
            TreeFamily::HitVertexRooted => "hit_vertex_rooted",
            TreeFamily::HitEdgeRooted => "hit_edge_rooted",
            TreeFamily::HitVertexEdgeRooted => "hit_vertex_edge_rooted",
        }
    }
}

impl fmt::Display for TreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown tree family `{}`", self.0)
    }
}

impl std::error::Error for UnknownFamily {}

impl FromStr for TreeFamily {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, UnknownFamily> {
        let normalized = s.replace('-', "_");
        TreeFamily::ALL
            .into_iter()
            .find(|f| f.tag() == normalized)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(Error::InvalidOrder(order))
    } else {
        Ok(())
    }
}

/// `r(x) = x h[r(x)]`, rooted trees counted by vertices.
pub fn rooted_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    check_order(order)?;
    let mut r = PowerSeries::zero(order);
    r.coeffs_mut()[1] = C::one();
    let mut euler = EulerTransform::new();
    for n in 1..order {
        let g_n = euler.push(r.coeff(n))?.clone();
        r.coeffs_mut()[n + 1] = g_n;
    }
    Ok(r)
}

/// One pass of successive substitution: `x exp(sum_k r(x^k)/k)`.
pub fn substitution_step(r: &PowerSeries<BigRational>) -> Result<PowerSeries<BigRational>> {
    let order = r.order();
    let mut log_sum = PowerSeries::zero(order);
    for k in 1..=order {
        let weight = BigRational::new(BigInt::one(), BigInt::from(k));
        log_sum = &log_sum + &r.scale_exponents(k)?.mul_scalar(&weight);
    }
    Ok(log_sum.exp()?.shift(1))
}

/// Rooted trees by iterating the functional equation on the whole series,
/// starting from `x`. Each pass fixes one more coefficient, so this costs
/// `order` full exponentials; it exists to cross-check [`rooted_series`].
pub fn rooted_series_naive(order: usize) -> Result<PowerSeries<BigInt>> {
    check_order(order)?;
    let mut r = PowerSeries::<BigRational>::x(order);
    for _ in 1..order {
        r = substitution_step(&r)?;
    }
    let coeffs = r
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::InexactDivision {
                    exponent: n,
                    divisor: c.denom().to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PowerSeries::from_coeffs(coeffs)
}

/// `u = r - (r^2 - r(x^2)) / 2`, free trees.
pub fn unrooted_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    let r = rooted_series::<C>(order)?;
    let asym = (&(&r * &r) - &r.scale_exponents(2)?).div_exact(2)?;
    Ok(&r - &asym)
}

/// `s = x (h[s] - s)`, solved in the form `(1 + x) s = x h[s]`.
pub fn stree_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    check_order(order)?;
    let mut s = PowerSeries::zero(order);
    s.coeffs_mut()[1] = C::one();
    let mut euler = EulerTransform::new();
    for n in 1..order {
        let mut next = euler.push(s.coeff(n))?.clone();
        next -= &s.coeffs()[n];
        s.coeffs_mut()[n + 1] = next;
    }
    Ok(s)
}

fn one_plus_x<C: Scalar>(order: usize) -> PowerSeries<C> {
    &PowerSeries::one(order) + &PowerSeries::x(order)
}

/// Irreducible trees rooted at a vertex: `(1 + x) s - x h_2[s]`.
pub fn hit_vertex_rooted_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    let s = stree_series::<C>(order)?;
    Ok(&(&one_plus_x(order) * &s) - &h2(&s).shift(1))
}

/// Irreducible trees rooted at an edge: `h_2[s]`.
pub fn hit_edge_rooted_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    Ok(h2(&stree_series::<C>(order)?))
}

/// Irreducible trees rooted at a vertex and an incident edge: `s^2`.
pub fn hit_vertex_edge_rooted_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    let s = stree_series::<C>(order)?;
    Ok(&s * &s)
}

/// Homeomorphically irreducible trees (no vertex of degree 2):
/// `(1 + x) s + (1 - x) s(x^2) / 2 - (1 + x) s^2 / 2`.
///
/// The result is checked against the dissymmetry assembly from the three
/// rooted variants before it is returned.
pub fn hit_series<C: Scalar>(order: usize) -> Result<PowerSeries<C>> {
    let s = stree_series::<C>(order)?;
    let opx = one_plus_x::<C>(order);
    let omx = &PowerSeries::one(order) - &PowerSeries::x(order);
    let s_sq = &s * &s;
    let halves = (&(&omx * &s.scale_exponents(2)?) - &(&opx * &s_sq)).div_exact(2)?;
    let hit = &(&opx * &s) + &halves;

    let h2s = h2(&s);
    let vertex = &(&opx * &s) - &h2s.shift(1);
    let assembled = &(&vertex + &h2s) - &s_sq;
    assert_eq!(
        hit, assembled,
        "closed form disagrees with dissymmetry assembly"
    );
    Ok(hit)
}

/// Counting series for `family`, truncated at `order` vertices.
pub fn series_for<C: Scalar>(family: TreeFamily, order: usize) -> Result<PowerSeries<C>> {
    check_order(order)?;
    match family {
        TreeFamily::Rooted => rooted_series(order),
        TreeFamily::Unrooted => unrooted_series(order),
        TreeFamily::STree => stree_series(order),
        TreeFamily::Hit => hit_series(order),
        TreeFamily::HitVertexRooted => hit_vertex_rooted_series(order),
        TreeFamily::HitEdgeRooted => hit_edge_rooted_series(order),
        TreeFamily::HitVertexEdgeRooted => hit_vertex_edge_rooted_series(order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiset::h_all;
    use num_traits::Zero;

    type S = PowerSeries<BigInt>;

    fn ints(s: &S) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn rooted_first_terms() {
        let r = rooted_series::<BigInt>(9).unwrap();
        assert_eq!(ints(&r), vec![0, 1, 1, 2, 4, 9, 20, 48, 115, 286]);
        assert_eq!(ints(&rooted_series::<BigInt>(1).unwrap()), vec![0, 1]);
        assert_eq!(
            rooted_series::<BigInt>(21).unwrap().coeff(21),
            BigInt::from(35221832)
        );
    }

    #[test]
    fn rooted_rejects_order_zero() {
        assert_eq!(rooted_series::<BigInt>(0), Err(Error::InvalidOrder(0)));
        assert_eq!(
            series_for::<BigInt>(TreeFamily::Hit, 0),
            Err(Error::InvalidOrder(0))
        );
    }

    #[test]
    fn naive_matches_recurrence() {
        for order in 1..=14 {
            assert_eq!(
                rooted_series_naive(order).unwrap(),
                rooted_series::<BigInt>(order).unwrap(),
                "order {order}"
            );
        }
    }

    #[test]
    fn one_substitution_pass_fixes_x_squared() {
        let r = substitution_step(&PowerSeries::x(2)).unwrap();
        let one = BigRational::one();
        assert_eq!(r.coeffs(), &[BigRational::zero(), one.clone(), one][..]);
    }

    #[test]
    fn unrooted_first_terms() {
        let u = unrooted_series::<BigInt>(10).unwrap();
        assert_eq!(ints(&u), vec![0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert_eq!(ints(&unrooted_series::<BigInt>(1).unwrap()), vec![0, 1]);
        assert_eq!(
            unrooted_series::<BigInt>(21).unwrap().coeff(21),
            BigInt::from(2144505)
        );
    }

    #[test]
    fn stree_satisfies_its_equation() {
        let s = stree_series::<BigInt>(30).unwrap();
        assert_eq!(s.coeff(1), BigInt::one());
        assert_eq!(s.coeff(2), BigInt::zero());
        let lhs = &one_plus_x::<BigInt>(30) * &s;
        let rhs = h_all(&s).unwrap().shift(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rooted_composed_with_x_over_one_plus_x_is_not_stree() {
        // r(x/(1+x)) agrees with s only through x^3; h[.] does not commute
        // with the substitution, so the two separate at x^4.
        let order = 8;
        let r = rooted_series::<BigInt>(order).unwrap();
        let composed = r.substitute(&S::x_over_one_plus_x(order)).unwrap();
        assert_eq!(ints(&composed), vec![0, 1, 0, 1, 0, 2, -1, 8, -12]);
        let s = stree_series::<BigInt>(order).unwrap();
        assert_eq!(ints(&s), vec![0, 1, 0, 1, 1, 2, 3, 6, 10]);
        assert_eq!(composed.truncate(3), s.truncate(3));
    }

    #[test]
    fn vertex_rooted_hit_has_two_forms() {
        let order = 25;
        let s = stree_series::<BigInt>(order).unwrap();
        let direct = (&h_all(&s).unwrap() - &h2(&s)).shift(1);
        let t = hit_vertex_rooted_series::<BigInt>(order).unwrap();
        assert_eq!(t, direct);
        assert_eq!(t.coeff(1), BigInt::one());
        assert_eq!(t.coeff(3), BigInt::zero());
    }

    #[test]
    fn edge_and_vertex_edge_rooted_small_terms() {
        let e = hit_edge_rooted_series::<BigInt>(6).unwrap();
        assert_eq!(e.coeff(2), BigInt::one());
        assert_eq!(e.coeff(3), BigInt::zero());
        let ve = hit_vertex_edge_rooted_series::<BigInt>(6).unwrap();
        let s = stree_series::<BigInt>(6).unwrap();
        assert_eq!(ve.coeff(2), BigInt::one());
        assert_eq!(ve.coeff(3), BigInt::zero());
        assert_eq!(ve.coeff(4), BigInt::from(2) * s.coeff(1) * s.coeff(3));
        assert_eq!(h2(&s.truncate(2)), S::monomial(1.into(), 2, 2));
    }

    #[test]
    fn hit_first_terms() {
        let t = hit_series::<BigInt>(21).unwrap();
        assert_eq!(
            ints(&t),
            vec![
                0, 1, 1, 0, 1, 1, 2, 2, 4, 5, 10, 14, 26, 42, 78, 132, 249, 445, 842, 1561, 2988,
                5671
            ]
        );
    }

    #[test]
    fn hit_at_one_hundred() {
        let t = hit_series::<BigInt>(100).unwrap();
        assert_eq!(
            t.coeff(100),
            "76119905667088547333499833156".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn dissymmetry_for_all_trees() {
        let order = 40;
        let r = rooted_series::<BigInt>(order).unwrap();
        let u = unrooted_series::<BigInt>(order).unwrap();
        let assembled = &(&r + &h2(&r)) - &(&r * &r);
        assert_eq!(u, assembled);
    }

    #[test]
    fn dispatch_covers_every_family() {
        assert_eq!(
            ints(&series_for(TreeFamily::Rooted, 5).unwrap()),
            vec![0, 1, 1, 2, 4, 9]
        );
        assert_eq!(
            ints(&series_for(TreeFamily::Hit, 3).unwrap()),
            vec![0, 1, 1, 0]
        );
        assert_eq!(
            ints(&series_for(TreeFamily::Unrooted, 1).unwrap()),
            vec![0, 1]
        );
        for family in TreeFamily::ALL {
            let s: S = series_for(family, 20).unwrap();
            assert!(s.coeffs().iter().all(|c| *c >= BigInt::zero()), "{family}");
        }
    }

    #[test]
    fn rooted_dominates_unrooted() {
        let r = rooted_series::<BigInt>(60).unwrap();
        let u = unrooted_series::<BigInt>(60).unwrap();
        for n in 1..=60 {
            assert!(r.coeff(n) >= u.coeff(n));
        }
    }

    #[test]
    fn machine_integers_match_big_integers_while_they_fit() {
        for family in TreeFamily::ALL {
            let small: PowerSeries<i64> = series_for(family, 25).unwrap();
            let big: S = series_for(family, 25).unwrap();
            assert_eq!(small.map(|c| BigInt::from(*c)), big, "{family}");
        }
    }

    #[test]
    fn family_tags_round_trip() {
        for family in TreeFamily::ALL {
            assert_eq!(family.tag().parse::<TreeFamily>().unwrap(), family);
        }
        assert_eq!(
            "hit-edge-rooted".parse::<TreeFamily>().unwrap(),
            TreeFamily::HitEdgeRooted
        );
        assert!("forest".parse::<TreeFamily>().is_err());
    }
}
