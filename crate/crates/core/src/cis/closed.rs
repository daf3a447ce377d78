//! Closed λ-indexed formulas for the PreLie- and Lie-decorated series.

use super::{prelie, tmono, Cis};
use crate::foundation::{
    factorial, moebius, partitions_up_to, rat, z_lambda, BigRat, IntPartition, TPoly,
};
use crate::hypertree::Kind;
use crate::{Error, Result};

/// `f_k(λ) = Σ_{l | k} l·λ_l`.
fn f(lambda: &IntPartition, k: u32) -> i64 {
    (1..=k)
        .filter(|l| k.is_multiple_of(*l))
        .map(|l| (l * lambda.multiplicity(l)) as i64)
        .sum()
}

/// `C(x, k)` for a polynomial `x`; zero when `k < 0`.
fn binom(x: &TPoly, k: i64) -> TPoly {
    if k < 0 {
        return TPoly::zero();
    }
    let mut r = TPoly::one();
    for j in 0..k {
        r = &r * &(x - &TPoly::from_int(j));
    }
    r.scale(&BigRat::from_integer(factorial(k as u64)).recip())
}

/// `num · a^e`, dividing exactly when `e < 0`.
fn times_power(num: TPoly, a: &TPoly, e: i64) -> TPoly {
    if e >= 0 {
        num * a.pow(e as u32)
    } else {
        num.div_exact(&a.pow((-e) as u32))
            .expect("negative power cancels in the closed formula")
    }
}

fn inv_z(lambda: &IntPartition) -> BigRat {
    BigRat::from_integer(z_lambda(lambda)).recip()
}

/// `(1/(1+t)) · PreLie ∘ ((1+t)p₁)`.
pub fn prelie_hollow_closed(max_degree: u32) -> Cis {
    let one_t = TPoly::one() + TPoly::t();
    let inner = Cis::p1(max_degree).scale(&one_t);
    prelie(max_degree)
        .plethysm(&inner)
        .unwrap()
        .map_coeffs(|c| c.div_exact(&one_t).expect("divisible by 1 + t"))
}

/// `P_k(λ) = ((1+t^k)f_k − 1)^{λ_k} − kλ_k(t^k+1)((1+t^k)f_k − 1)^{λ_k−1}`.
fn p_k(lambda: &IntPartition, k: u32) -> TPoly {
    let lk = lambda.multiplicity(k);
    if lk == 0 {
        return TPoly::one();
    }
    let tk1 = TPoly::one() + tmono(k as i64, 1);
    let a = &tk1.scale(&rat(f(lambda, k), 1)) - &TPoly::one();
    &a.pow(lk) - &(&tk1 * &a.pow(lk - 1)).scale(&rat((k * lk) as i64, 1))
}

/// The PreLie-decorated series from the closed formulas. The formulas cover the
/// partitions with at least one part 1; for the edge-pointed and plain kinds the
/// terms without `p₁` are not produced.
pub fn prelie_cis_closed(kind: Kind, max_degree: u32) -> Cis {
    if kind == Kind::Hollow {
        return prelie_hollow_closed(max_degree);
    }
    let mut out = Cis::zero(max_degree);
    for lambda in partitions_up_to(max_degree) {
        let l1 = lambda.multiplicity(1) as i64;
        if l1 == 0 {
            continue;
        }
        let a = TPoly::linear(rat(l1 - 1, 1), rat(l1, 1));
        let c = match kind {
            Kind::Rooted => times_power(TPoly::from_int(l1), &a, l1 - 2),
            Kind::RootedEdgePointed => {
                let num = TPoly::linear(rat(1, 1), rat(2, 1)).scale(&rat(l1 * (l1 - 1), 1));
                times_power(num, &a, l1 - 3)
            }
            Kind::EdgePointed => {
                let num = TPoly::linear(rat(1, 1), rat(l1, 1)).scale(&rat(l1 - 1, 1));
                times_power(num, &a, l1 - 3)
            }
            Kind::Plain => times_power(TPoly::one(), &a, l1 - 2),
            Kind::Hollow => unreachable!(),
        };
        let prod = (2..=max_degree).fold(c, |acc, k| acc * p_k(&lambda, k));
        out.add_term(lambda.clone(), prod.scale(&inv_z(&lambda)));
    }
    out
}

/// `φ_i(λ) = Σ_{k | i} (t^k/i)·μ(i/k)·f_k(λ)`.
fn phi(lambda: &IntPartition, i: u32) -> TPoly {
    (1..=i)
        .filter(|k| i.is_multiple_of(*k))
        .map(|k| {
            let c = moebius((i / k) as u64) * f(lambda, k);
            TPoly::monomial(k as i64, rat(c, i as i64))
        })
        .sum()
}

/// `C(φ_i+λ_i−1, λ_i) − t^i·C(φ_i+λ_i−1, λ_i−1)`.
fn bracket(lambda: &IntPartition, i: u32) -> TPoly {
    let li = lambda.multiplicity(i) as i64;
    let x = &phi(lambda, i) + &TPoly::from_int(li - 1);
    &binom(&x, li) - &(&tmono(i as i64, 1) * &binom(&x, li - 1))
}

fn lie_rooted_coeff(lambda: &IntPartition) -> TPoly {
    let l1 = lambda.multiplicity(1) as i64;
    let mut c = TPoly::t_pow(-1);
    for k in 0..=l1 - 2 {
        c = c * TPoly::linear(rat(k, 1), rat(l1, 1));
    }
    for i in 2..=lambda.weight() {
        c = c * bracket(lambda, i);
    }
    c.scale(&BigRat::from_integer(factorial(l1 as u64)).recip())
}

fn lie_hollow_coeff(lambda: &IntPartition) -> TPoly {
    let r = lambda.largest_part();
    let mut total = TPoly::zero();
    for p in 1..=r {
        let mu = moebius(p as u64);
        let lp = lambda.multiplicity(p) as i64;
        if mu == 0 || lp == 0 {
            continue;
        }
        let others = (1..=r)
            .filter(|&i| i != p)
            .fold(TPoly::one(), |acc, i| acc * bracket(lambda, i));
        let ph = phi(lambda, p);
        let mut s = TPoly::zero();
        for q in 1..=lp {
            let x = &ph + &TPoly::from_int(lp - q - 1);
            let term = &binom(&x, lp - q) - &(&tmono(p as i64, 1) * &binom(&x, lp - q - 1));
            s += &term.scale(&rat(1, q));
        }
        total += &(others * s).scale(&rat(mu, p as i64));
    }
    total
}

/// The Lie-decorated rooted or hollow series from the closed formulas in `φ_i`.
pub fn lie_cis_closed(kind: Kind, max_degree: u32) -> Result<Cis> {
    let coeff: fn(&IntPartition) -> TPoly = match kind {
        Kind::Rooted => lie_rooted_coeff,
        Kind::Hollow => lie_hollow_coeff,
        other => {
            return Err(Error::Unsupported(format!(
                "closed Lie series for {other:?}"
            )))
        }
    };
    let mut out = Cis::zero(max_degree);
    for lambda in partitions_up_to(max_degree)
        .into_iter()
        .filter(|l| !l.is_empty())
    {
        out.add_term(lambda.clone(), coeff(&lambda));
    }
    Ok(out)
}
