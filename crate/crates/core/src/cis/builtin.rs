use super::{from_class_function, solve_fixed_point, Cis, CisEquation, CisExpr};
use crate::foundation::{euler_phi, moebius, rat, IntPartition, TPoly};
use crate::species::{SpeciesHandle, SpeciesName};
use crate::{Error, Result};

pub const BUILTIN_NAMES: [&str; 11] = [
    "X",
    "E",
    "Comm",
    "Assoc",
    "Cycle",
    "Perm",
    "Lie",
    "PreLie",
    "SigmaLie",
    "SigmaAssoc",
    "Pasc",
];

pub fn cis_builtin(name: &str, max_degree: u32) -> Result<Cis> {
    let n = max_degree;
    Ok(match name.to_ascii_lowercase().as_str() {
        "x" => x(n),
        "e" => e(n),
        "comm" => comm(n),
        "assoc" => assoc(n),
        "cycle" => cycle(n),
        "perm" => perm(n),
        "lie" => lie(n),
        "prelie" => prelie(n),
        "sigmalie" => sigma_lie(n),
        "sigmaassoc" => sigma_assoc(n),
        "pasc" => pasc(n),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

pub fn x(n: u32) -> Cis {
    Cis::p1(n)
}

/// `exp(Σ_k p_k/k)`.
pub fn e(n: u32) -> Cis {
    let mut s = Cis::zero(n);
    for k in 1..=n {
        s.add_term(
            IntPartition::new(vec![k]),
            TPoly::constant(rat(1, k as i64)),
        );
    }
    s.exp().expect("no constant term")
}

pub fn comm(n: u32) -> Cis {
    e(n).sub(&Cis::one(n)).unwrap()
}

/// `p₁/(1 − p₁)`.
pub fn assoc(n: u32) -> Cis {
    Cis::from_terms(n, (1..=n).map(|m| (IntPartition::ones(m), TPoly::one())))
}

/// `Σ_{k,m} c(k)/(km) p_k^m`.
fn log_sum(n: u32, c: impl Fn(u32) -> i64) -> Cis {
    let mut out = Cis::zero(n);
    for k in 1..=n {
        for m in 1..=n / k {
            let lambda = IntPartition::new(vec![k; m as usize]);
            out.add_term(lambda, TPoly::constant(rat(c(k), (k * m) as i64)));
        }
    }
    out
}

/// `Σ_k φ(k)/k · log(1/(1 − p_k))`.
pub fn cycle(n: u32) -> Cis {
    log_sum(n, |k| euler_phi(k as u64) as i64)
}

/// `−Σ_k μ(k)/k · log(1 − p_k)`.
pub fn lie(n: u32) -> Cis {
    log_sum(n, |k| moebius(k as u64))
}

/// `p₁ · E`.
pub fn perm(n: u32) -> Cis {
    Cis::p1(n).mul(&e(n)).unwrap()
}

/// The solution of `Z = p₁ · E ∘ Z`.
pub fn prelie(n: u32) -> Cis {
    let eq = CisEquation::new(
        CisExpr::constant(Cis::p1(n)) * CisExpr::compose_into(e(n), CisExpr::unknown()),
    );
    solve_fixed_point(&eq, n).expect("well-founded")
}

pub fn sigma_lie(n: u32) -> Cis {
    lie(n).suspension(false)
}

pub fn sigma_assoc(n: u32) -> Cis {
    assoc(n).suspension(false)
}

/// `(1 + Comm) · Σ_t Comm`.
pub fn pasc(n: u32) -> Cis {
    e(n).mul(&comm(n).suspension(true)).unwrap()
}

/// `Σ_λ χ(λ)/z_λ p_λ` from the character of the species.
pub fn character_cis(s: &SpeciesHandle, n: u32) -> Cis {
    from_class_function(n, |l| TPoly::constant(s.character(l)))
}

pub fn species_cis(s: &SpeciesHandle, n: u32) -> Cis {
    match s.name() {
        SpeciesName::X => x(n),
        SpeciesName::E => e(n),
        SpeciesName::Comm => comm(n),
        SpeciesName::Assoc => assoc(n),
        SpeciesName::Cycle => cycle(n),
        SpeciesName::Perm => perm(n),
        SpeciesName::PreLie => prelie(n),
        SpeciesName::Lie => lie(n),
        SpeciesName::TwoColouredForestEdgeFactor => character_cis(s, n),
    }
}

/// A series `S` with `∂S/∂p₁ = B` and no constant or linear term, for the
/// block species that have one.
pub fn antiderivative(b: SpeciesName, n: u32) -> Result<Cis> {
    let p1 = Cis::p1(n);
    Ok(match b {
        SpeciesName::X => Cis::from_terms(
            n,
            [
                (IntPartition::new(vec![1, 1]), TPoly::constant(rat(1, 2))),
                (IntPartition::new(vec![2]), TPoly::constant(rat(1, 2))),
            ],
        ),
        SpeciesName::Comm => comm(n).sub(&p1)?,
        SpeciesName::Assoc => cycle(n).sub(&p1)?,
        SpeciesName::Lie => p1.sub(&Cis::one(n))?.mul(&lie(n))?.add(&p1)?,
        SpeciesName::PreLie => {
            // p₁ + p₁·PreLie + 1/U − 1 with U = PreLie/p₁
            let u = prelie(n + 1).div_p1()?;
            p1.add(&p1.mul(&prelie(n))?)?
                .add(&u.inverse()?)?
                .sub(&Cis::one(n))?
        }
        other => return Err(Error::MissingAntiderivative(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::pow_big;
    use crate::species::builtin_species;

    fn part(p: &[u32]) -> IntPartition {
        IntPartition::new(p.to_vec())
    }

    #[test]
    fn builtins_match_characters() {
        for name in ["X", "E", "Comm", "Assoc", "Cycle", "Perm", "Lie", "PreLie"] {
            let s = builtin_species(name).unwrap();
            assert_eq!(species_cis(&s, 5), character_cis(&s, 5), "{name}");
        }
    }

    #[test]
    fn lie_degree_three() {
        let l = lie(3).homogeneous(3);
        assert_eq!(l.coeff(&part(&[1, 1, 1])), TPoly::constant(rat(1, 3)));
        assert_eq!(l.coeff(&part(&[3])), TPoly::constant(rat(-1, 3)));
        assert!(l.coeff(&part(&[2, 1])).is_zero());
        assert_eq!(l.fixed_count(&part(&[1, 1, 1])), TPoly::from_int(2));
    }

    #[test]
    fn prelie_small() {
        assert_eq!(
            prelie(2).homogeneous(2),
            Cis::monomial(2, part(&[1, 1]), TPoly::one())
        );
        let p = prelie(6);
        for n in 1..=6u32 {
            assert_eq!(
                p.fixed_count(&IntPartition::ones(n)),
                TPoly::from(pow_big(n as i64, n - 1))
            );
        }
    }

    #[test]
    fn pointed_sets_coefficient() {
        let z = x(3).mul(&e(3)).unwrap();
        assert_eq!(z.fixed_count(&part(&[2, 1])), TPoly::one());
    }

    #[test]
    fn antiderivatives_differentiate_back() {
        for name in ["X", "Comm", "Assoc", "Lie", "PreLie"] {
            let b = SpeciesName::parse(name).unwrap();
            let s = antiderivative(b, 6).unwrap();
            let want = species_cis(&SpeciesHandle::new(b), 5);
            assert_eq!(s.derivative(), want, "{name}");
            assert!(s.coeff(&part(&[1])).is_zero());
        }
        assert!(matches!(
            antiderivative(SpeciesName::Cycle, 4),
            Err(Error::MissingAntiderivative(_))
        ));
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(cis_builtin("Foo", 3), Err(Error::UnknownName(_))));
        for name in BUILTIN_NAMES {
            assert_eq!(cis_builtin(name, 3).unwrap().max_degree(), 3);
        }
    }
}
