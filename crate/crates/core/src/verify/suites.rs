use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::One;

use super::{Limits, Report, Suite};
use crate::boxtree::{self, examples};
use crate::cis::{self, Cis};
use crate::egf::{
    closed_series, count_to_series, lie_closed, lie_edge_pointed_printed, prelie_closed,
    weighted_closed, Egf,
};
use crate::foundation::{integer_partitions, set_partitions, MultiPoly, TPoly};
use crate::hypertree::{
    count_fixed_weighted, enumerate, enumerate_decorated, enumerate_with_limit, weighted_count,
    Kind, DEFAULT_LIMIT,
};
use crate::species::{BlockSpecies, SpeciesHandle, SpeciesName};
use crate::Result;

type Outcome = Result<Option<String>>;
type Law<'a> = &'a dyn Fn(&Cis, &Cis, &Cis) -> Outcome;

const BLOCKS: [SpeciesName; 6] = [
    SpeciesName::Comm,
    SpeciesName::Assoc,
    SpeciesName::Perm,
    SpeciesName::Cycle,
    SpeciesName::PreLie,
    SpeciesName::Lie,
];

pub(super) fn run_one(suite: Suite, limits: &Limits) -> Report {
    let mut r = Report::default();
    match suite {
        Suite::Bijections => bijections(&mut r, limits),
        Suite::CountSeries => count_series(&mut r, limits),
        Suite::Dissymmetry => dissymmetry(&mut r, limits),
        Suite::PreLie => prelie(&mut r, limits),
        Suite::Lie => lie(&mut r, limits),
        Suite::Weighted => weighted(&mut r, limits),
        Suite::Cis => cis_suite(&mut r, limits),
        Suite::Bidecorated => bidecorated(&mut r, limits),
        Suite::Lambda => r.identities(suite, cis::operad_identities(limits.degree)),
        Suite::All => unreachable!("expanded by the caller"),
    }
    r
}

fn differ<T: PartialEq + Display>(a: &T, b: &T) -> Option<String> {
    (a != b).then(|| format!("{a} != {b}"))
}

fn egf_diff(a: &Egf, b: &Egf, upto: u32) -> Option<String> {
    (0..=upto)
        .find(|&n| a.coeff(n) != b.coeff(n))
        .map(|n| format!("n={n}: {} != {}", a.coeff(n), b.coeff(n)))
}

fn cis_diff(a: &Cis, b: &Cis) -> Option<String> {
    cis::Identity::new("", a.clone(), b.clone())
        .first_difference()
        .map(|(l, x, y)| format!("at p{l}: {x} != {y}"))
}

fn block(name: SpeciesName) -> BlockSpecies {
    BlockSpecies::new(name)
}

/// `Σ_H t^{max(k−1,0)} ∏_e B.dim(|e|−1)` for several `B` from one enumeration.
fn counts(kind: Kind, n: u32, blocks: &[SpeciesName]) -> Result<Vec<TPoly>> {
    let mut out = vec![TPoly::zero(); blocks.len()];
    for v in enumerate_with_limit(kind, n, DEFAULT_LIMIT)? {
        for (i, &b) in blocks.iter().enumerate() {
            let b = block(b);
            let mut w = BigInt::one();
            for e in v.tree().edge_masks() {
                w *= b.dim(e.count_ones() - 1);
            }
            out[i].add_term(v.weight_exponent(), w.into());
        }
    }
    Ok(out)
}

/// Brute-force counts in the series convention, keyed by kind and size.
fn brute_table(n_max: u32, blocks: &[SpeciesName]) -> Result<BTreeMap<(Kind, u32), Vec<TPoly>>> {
    let mut t = BTreeMap::new();
    for kind in Kind::ALL {
        for n in 1..=n_max {
            let c = counts(kind, n, blocks)?;
            t.insert(
                (kind, n),
                c.iter().map(|c| count_to_series(kind, n, c)).collect(),
            );
        }
    }
    Ok(t)
}

fn against_brute(
    table: &BTreeMap<(Kind, u32), Vec<TPoly>>,
    idx: usize,
    kind: Kind,
    n_max: u32,
    closed: &Egf,
) -> Option<String> {
    (1..=n_max)
        .find(|&n| &table[&(kind, n)][idx] != closed.coeff(n))
        .map(|n| {
            format!(
                "n={n}: brute force {} != closed {}",
                table[&(kind, n)][idx],
                closed.coeff(n)
            )
        })
}

fn x_weight(h: &crate::hypertree::DecoratedHypertree) -> MultiPoly {
    let n = h.variant.n() as usize;
    let (xe, _) = h.monomial_exponents();
    MultiPoly::monomial(n, &xe, &vec![0; n], TPoly::one())
}

fn bijections(r: &mut Report, l: &Limits) {
    let s = Suite::Bijections;
    let nb = l.n_max.min(5);
    for name in [
        SpeciesName::Comm,
        SpeciesName::Assoc,
        SpeciesName::Perm,
        SpeciesName::PreLie,
    ] {
        r.check(
            s,
            &format!("box-tree decomposition round trips and weights, {name}, n <= {nb}"),
            decomposition_round_trips(name, nb),
        );
    }
    r.check(
        s,
        &format!("fat-tree bijection, n <= {nb}"),
        fat_round_trips(nb),
    );
    r.check(
        s,
        &format!("2-coloured tree bijections, n <= {nb}"),
        coloured_round_trips(nb),
    );
    let nc = l.n_max.min(6);
    r.check(
        s,
        &format!("box-tree counts n0*n^(k-1), n <= {nc}"),
        box_counts(nc, false),
    );
    r.check(
        s,
        &format!("weighted box-tree counts, n <= {nb}"),
        box_counts(nb, true),
    );
    r.check(s, "worked examples", worked_examples());
}

fn decomposition_round_trips(name: SpeciesName, nb: u32) -> Outcome {
    let d = SpeciesHandle::new(name);
    for n in 1..=nb {
        for h in enumerate_decorated(Kind::Rooted, n, &d)? {
            let t = boxtree::decompose_rooted(&h)?;
            if boxtree::recompose_rooted(&t)? != h || t.box_tree.weight(n as usize) != x_weight(&h)
            {
                return Ok(Some(format!("rooted {h}")));
            }
        }
        for h in enumerate_decorated(Kind::Hollow, n, &d)? {
            let p = boxtree::decompose_hollow(&h)?;
            if boxtree::recompose_hollow(&p)? != h || p.box_tree.weight(n as usize) != x_weight(&h)
            {
                return Ok(Some(format!("hollow {h}")));
            }
        }
    }
    Ok(None)
}

fn fat_round_trips(nb: u32) -> Outcome {
    let perm = SpeciesHandle::new(SpeciesName::Perm);
    for n in 1..=nb {
        let mut fts = Vec::new();
        for h in enumerate_decorated(Kind::Hollow, n, &perm)? {
            let ft = boxtree::hollow_to_fat(&h)?;
            if boxtree::fat_to_hollow(&ft)? != h {
                return Ok(Some(format!("{h}")));
            }
            fts.push(ft);
        }
        fts.sort();
        if fts != boxtree::enumerate_rooted_fat_trees(n) {
            return Ok(Some(format!("n={n}: image is not every rooted fat tree")));
        }
    }
    Ok(None)
}

fn coloured_round_trips(nb: u32) -> Outcome {
    let prelie = SpeciesHandle::new(SpeciesName::PreLie);
    for n in 1..=nb {
        let mut ts = Vec::new();
        for h in enumerate_decorated(Kind::Hollow, n, &prelie)? {
            let t = boxtree::hollow_to_two_coloured(&h)?;
            if boxtree::two_coloured_to_hollow(&t)? != h
                || t.red_edges() + 1 != h.variant.num_edges()
            {
                return Ok(Some(format!("hollow {h}")));
            }
            ts.push(t);
        }
        ts.sort();
        let all = boxtree::enumerate_two_coloured_trees(n);
        if ts != all {
            return Ok(Some(format!(
                "n={n}: hollow image is not every 2-coloured tree"
            )));
        }
        let mut rs = Vec::new();
        for h in enumerate_decorated(Kind::RootedEdgePointed, n, &prelie)? {
            let t = boxtree::rooted_edge_pointed_to_two_coloured(&h)?;
            if boxtree::two_coloured_to_rooted_edge_pointed(&t)? != h {
                return Ok(Some(format!("rooted edge-pointed {h}")));
            }
            rs.push(t);
        }
        rs.sort();
        let want: Vec<_> = all
            .into_iter()
            .filter(|t| boxtree::two_coloured_to_rooted_edge_pointed(t).is_ok())
            .collect();
        if rs != want {
            return Ok(Some(format!("n={n}: rooted edge-pointed image mismatch")));
        }
    }
    Ok(None)
}

fn box_counts(nb: u32, weighted: bool) -> Outcome {
    for n in 1..=nb {
        let g: Vec<u32> = (1..=n).collect();
        for p in set_partitions(&g, None) {
            for root in 0..p.num_blocks() {
                let trees = boxtree::enumerate_box_trees(&p, root);
                let sizes: Vec<u32> = (0..p.num_blocks())
                    .filter(|&i| i != root)
                    .map(|i| p.blocks()[i].len() as u32)
                    .collect();
                let ok = if weighted {
                    let w = trees.iter().fold(MultiPoly::zero(n as usize), |acc, t| {
                        acc + t.weight(n as usize)
                    });
                    w == boxtree::weighted_box_count_formula(
                        &p.blocks()[root],
                        n,
                        sizes.len() as u32,
                    )
                } else {
                    BigInt::from(trees.len())
                        == boxtree::count_box_trees_formula(p.blocks()[root].len() as u32, &sizes)
                };
                if !ok {
                    return Ok(Some(format!("{p} with root box {root}")));
                }
            }
        }
    }
    Ok(None)
}

fn worked_examples() -> Outcome {
    let h = examples::hollow_pointed();
    let checks = [
        (
            "hollow pointed decomposition",
            boxtree::decompose_hollow(&h)? == examples::hollow_pointed_box_tree(),
        ),
        (
            "hollow pointed recomposition",
            boxtree::recompose_hollow(&examples::hollow_pointed_box_tree())? == h,
        ),
        (
            "hollow pointed weight",
            examples::hollow_pointed_box_tree().box_tree.weight(9)
                == examples::hollow_pointed_weight(),
        ),
        (
            "fat tree",
            boxtree::hollow_to_fat(&h)? == examples::fat_tree(),
        ),
        (
            "fat tree inverse",
            boxtree::fat_to_hollow(&examples::fat_tree())? == h,
        ),
        (
            "rooted lists",
            boxtree::decompose_rooted(&examples::rooted_lists())?
                == examples::rooted_lists_triple(),
        ),
        (
            "rooted lists inverse",
            boxtree::recompose_rooted(&examples::rooted_lists_triple())?
                == examples::rooted_lists(),
        ),
        (
            "rooted lists weight",
            examples::rooted_lists_triple().box_tree.weight(15) == examples::rooted_lists_weight(),
        ),
        (
            "2-coloured tree",
            boxtree::hollow_to_two_coloured(&examples::hollow_trees())? == examples::two_coloured(),
        ),
        (
            "2-coloured tree inverse",
            boxtree::two_coloured_to_hollow(&examples::two_coloured())? == examples::hollow_trees(),
        ),
    ];
    Ok(checks.iter().find(|c| !c.1).map(|c| c.0.to_string()))
}

fn count_series(r: &mut Report, l: &Limits) {
    let s = Suite::CountSeries;
    let known = [1u64, 1, 4, 29, 311, 4447];
    let top = l.n_max.min(6);
    let plain: Result<Option<String>> = (|| {
        for n in 1..=top {
            let got = enumerate(Kind::Plain, n)?.len() as u64;
            if got != known[n as usize - 1] {
                return Ok(Some(format!("n={n}: {got} != {}", known[n as usize - 1])));
            }
        }
        Ok(None)
    })();
    r.check(
        s,
        &format!("plain hypertree counts 1, 1, 4, 29, 311, 4447 up to n = {top}"),
        plain,
    );
    let table = match brute_table(l.n_max, &BLOCKS) {
        Ok(t) => t,
        Err(e) => return r.check(s, "enumeration", Err(e)),
    };
    for (i, &b) in BLOCKS.iter().enumerate() {
        for kind in Kind::ALL {
            let outcome = closed_series(kind, &block(b), l.n_max)
                .map(|c| against_brute(&table, i, kind, l.n_max, &c));
            r.check(
                s,
                &format!("{b} {} n <= {}", kind.as_str(), l.n_max),
                outcome,
            );
        }
    }
}

fn dissymmetry(r: &mut Report, l: &Limits) {
    let s = Suite::Dissymmetry;
    let table = match brute_table(l.n_max, &BLOCKS) {
        Ok(t) => t,
        Err(e) => return r.check(s, "enumeration", Err(e)),
    };
    for (i, b) in BLOCKS.iter().enumerate() {
        let bad = (1..=l.n_max).find_map(|n| {
            let c = |k| table[&(k, n)][i].clone();
            let left = c(Kind::Plain) + c(Kind::RootedEdgePointed);
            let right = c(Kind::Rooted) + c(Kind::EdgePointed);
            differ(&left, &right).map(|d| format!("n={n}: {d}"))
        });
        r.check(
            s,
            &format!("H + H^re = H^r + H^e, {b}, n <= {}", l.n_max),
            Ok(bad),
        );
    }
    for b in [
        SpeciesName::Comm,
        SpeciesName::Assoc,
        SpeciesName::Lie,
        SpeciesName::PreLie,
    ] {
        let outcome = (|| {
            let z = |k| cis::decorated_cis(k, &block(b), l.degree);
            let left = z(Kind::Plain)?.add(&z(Kind::RootedEdgePointed)?)?;
            let right = z(Kind::Rooted)?.add(&z(Kind::EdgePointed)?)?;
            Ok(cis_diff(&left, &right))
        })();
        r.check(
            s,
            &format!("cycle index dissymmetry, {b}, degree <= {}", l.degree),
            outcome,
        );
    }
}

fn prelie(r: &mut Report, l: &Limits) {
    let s = Suite::PreLie;
    let b = block(SpeciesName::PreLie);
    match brute_table(l.n_max, &[SpeciesName::PreLie]) {
        Ok(table) => {
            for kind in Kind::ALL {
                let c = prelie_closed(kind, l.n_max);
                r.check(
                    s,
                    &format!(
                        "closed {} series vs brute force, n <= {}",
                        kind.as_str(),
                        l.n_max
                    ),
                    Ok(against_brute(&table, 0, kind, l.n_max, &c)),
                );
            }
        }
        Err(e) => r.check(s, "enumeration", Err(e)),
    }
    for kind in Kind::ALL {
        let outcome = closed_series(kind, &b, 8).map(|c| egf_diff(&prelie_closed(kind, 8), &c, 8));
        r.check(
            s,
            &format!(
                "printed {} formula vs general series, n <= 8",
                kind.as_str()
            ),
            outcome,
        );
    }
    for kind in Kind::ALL {
        let closed = cis::prelie_cis_closed(kind, l.degree);
        let outcome = cis::decorated_cis(kind, &b, l.degree).map(|z| {
            let (want, omitted) = match kind {
                Kind::Plain | Kind::EdgePointed => (z.with_p1(), Some(z.sub(&z.with_p1()).unwrap())),
                _ => (z, None),
            };
            if let Some(o) = omitted {
                let parts: Vec<String> = o.terms().map(|(l, c)| format!("p{l}: {c}")).collect();
                r.info(
                    s,
                    format!(
                        "closed {} cycle index covers terms with p1; other terms from the equations: {}",
                        kind.as_str(),
                        if parts.is_empty() { "none".into() } else { parts.join(", ") }
                    ),
                );
            }
            cis_diff(&closed, &want)
        });
        r.check(
            s,
            &format!(
                "closed {} cycle index vs equations, degree <= {}",
                kind.as_str(),
                l.degree
            ),
            outcome,
        );
        r.check(
            s,
            &format!(
                "closed {} cycle index specialises to the series",
                kind.as_str()
            ),
            Ok(egf_diff(
                &closed.egf(),
                &prelie_closed(kind, l.degree),
                l.degree,
            )),
        );
    }
}

fn lie(r: &mut Report, l: &Limits) {
    let s = Suite::Lie;
    let b = block(SpeciesName::Lie);
    match brute_table(l.n_max, &[SpeciesName::Lie]) {
        Ok(table) => {
            for kind in Kind::ALL {
                let outcome =
                    lie_closed(kind, l.n_max).map(|c| against_brute(&table, 0, kind, l.n_max, &c));
                r.check(
                    s,
                    &format!(
                        "closed {} series vs brute force, n <= {}",
                        kind.as_str(),
                        l.n_max
                    ),
                    outcome,
                );
            }
        }
        Err(e) => r.check(s, "enumeration", Err(e)),
    }
    let cycle = block(SpeciesName::Cycle);
    for kind in Kind::ALL {
        let outcome = (|| {
            Ok(egf_diff(
                &lie_closed(kind, 8)?,
                &closed_series(kind, &b, 8)?,
                8,
            ))
        })();
        r.check(
            s,
            &format!(
                "product formula {} vs general series, n <= 8",
                kind.as_str()
            ),
            outcome,
        );
        let outcome = (|| {
            Ok(egf_diff(
                &closed_series(kind, &b, 8)?,
                &closed_series(kind, &cycle, 8)?,
                8,
            ))
        })();
        r.check(
            s,
            &format!("Lie and Cycle decorations agree, {}, n <= 8", kind.as_str()),
            outcome,
        );
    }
    if let Ok(e) = lie_closed(Kind::EdgePointed, 8) {
        let verdict =
            egf_diff(&lie_edge_pointed_printed(8), &e, 8).unwrap_or_else(|| "holds".into());
        r.info(
            s,
            format!("literal edge_pointed product formula vs dissymmetry: {verdict}"),
        );
    }
    for kind in [Kind::Rooted, Kind::Hollow] {
        let outcome = (|| {
            let closed = cis::lie_cis_closed(kind, l.degree)?;
            let z = cis::decorated_cis(kind, &b, l.degree)?;
            let series = lie_closed(kind, l.degree)?;
            Ok(cis_diff(&closed, &z).or_else(|| egf_diff(&closed.egf(), &series, l.degree)))
        })();
        r.check(
            s,
            &format!(
                "closed {} cycle index vs equations and series, degree <= {}",
                kind.as_str(),
                l.degree
            ),
            outcome,
        );
    }
}

fn weighted(r: &mut Report, l: &Limits) {
    let s = Suite::Weighted;
    let nb = l.n_max.min(5);
    for name in [SpeciesName::Comm, SpeciesName::PreLie] {
        for kind in [Kind::Rooted, Kind::Hollow] {
            let ys: &[bool] = if name == SpeciesName::PreLie {
                &[false, true]
            } else {
                &[false]
            };
            for &with_y in ys {
                let outcome = (|| {
                    for n in 1..=nb {
                        let a = weighted_closed(kind, &block(name), n, with_y)?;
                        let b = weighted_count(kind, &block(name), n, with_y)?;
                        if a != b {
                            return Ok(Some(format!("n={n}: {a} != {b}")));
                        }
                    }
                    Ok(None)
                })();
                let y = if with_y { " with y-weights" } else { "" };
                r.check(
                    s,
                    &format!("{name} {}{y}, n <= {nb}", kind.as_str()),
                    outcome,
                );
            }
        }
    }
}

fn cis_suite(r: &mut Report, l: &Limits) {
    let s = Suite::Cis;
    let d = l.degree;
    let builtins: Vec<(&str, Cis)> = ["Comm", "Assoc", "Cycle", "Perm", "Lie", "PreLie", "Pasc"]
        .into_iter()
        .map(|n| (n, cis::cis_builtin(n, d).unwrap()))
        .collect();
    let p1 = Cis::p1(d);
    let law = |f: Law| -> Outcome {
        for i in 0..builtins.len() {
            let (a, b, c) = (
                &builtins[i].1,
                &builtins[(i + 1) % 7].1,
                &builtins[(i + 3) % 7].1,
            );
            if let Some(why) = f(a, b, c)? {
                return Ok(Some(format!("{}: {why}", builtins[i].0)));
            }
        }
        Ok(None)
    };
    r.check(
        s,
        &format!("f o p1 = f, degree <= {d}"),
        law(&|f, _, _| Ok(cis_diff(&f.plethysm(&p1)?, f))),
    );
    r.check(
        s,
        &format!("plethysm is associative, degree <= {d}"),
        law(&|f, g, h| {
            Ok(cis_diff(
                &f.plethysm(&g.plethysm(h)?)?,
                &f.plethysm(g)?.plethysm(h)?,
            ))
        }),
    );
    r.check(
        s,
        "suspension is an involution",
        law(&|f, _, _| Ok(cis_diff(&f.suspension(false).suspension(false), f))),
    );
    r.check(
        s,
        "suspension commutes with plethysm",
        law(&|f, g, _| {
            Ok(cis_diff(
                &f.plethysm(g)?.suspension(false),
                &f.suspension(false).plethysm(&g.suspension(false))?,
            ))
        }),
    );
    r.check(
        s,
        "-Sigma f = f o (-p1)",
        law(&|f, _, _| {
            Ok(cis_diff(
                &f.suspension(false).neg(),
                &f.plethysm(&p1.neg())?,
            ))
        }),
    );
    r.check(
        s,
        "derivative of Cycle is 1 + Assoc",
        Ok(cis_diff(
            &cis::cycle(d + 1).derivative(),
            &cis::assoc(d).add(&Cis::one(d)).unwrap(),
        )),
    );
    r.check(
        s,
        "derivative of E is E",
        Ok(cis_diff(&cis::e(d + 1).derivative(), &cis::e(d))),
    );

    let nf = l.n_max.min(d);
    let cases = [
        (SpeciesName::Comm, Some(SpeciesName::Comm)),
        (SpeciesName::Assoc, Some(SpeciesName::Cycle)),
        (SpeciesName::Perm, None),
        (SpeciesName::Cycle, None),
        (SpeciesName::PreLie, None),
    ];
    for (b, whole_edge) in cases {
        for kind in [Kind::Plain, Kind::Rooted, Kind::Hollow] {
            let dec = match (kind, whole_edge) {
                (Kind::Plain, Some(w)) => SpeciesHandle::new(w),
                (Kind::Plain, None) => continue,
                _ => SpeciesHandle::new(b),
            };
            let outcome = (|| {
                let z = cis::decorated_cis(kind, &block(b), nf)?;
                for n in 1..=nf {
                    for lam in integer_partitions(n) {
                        let want = count_to_series(
                            kind,
                            n,
                            &count_fixed_weighted(kind, &lam, Some(&dec))?,
                        );
                        let got = z.fixed_count(&lam);
                        if got != want {
                            return Ok(Some(format!(
                                "{lam}: cycle index {got} != brute force {want}"
                            )));
                        }
                    }
                }
                Ok(None)
            })();
            r.check(
                s,
                &format!("fixed points, {b} {}, n <= {nf}", kind.as_str()),
                outcome,
            );
        }
    }
    for b in [
        SpeciesName::Comm,
        SpeciesName::Assoc,
        SpeciesName::Lie,
        SpeciesName::PreLie,
    ] {
        for kind in Kind::ALL {
            let outcome = (|| {
                let z = cis::decorated_cis(kind, &block(b), d)?;
                Ok(egf_diff(&z.egf(), &closed_series(kind, &block(b), d)?, d))
            })();
            r.check(
                s,
                &format!("specialisation, {b} {}, degree <= {d}", kind.as_str()),
                outcome,
            );
        }
    }
}

fn bidecorated(r: &mut Report, l: &Limits) {
    let s = Suite::Bidecorated;
    let d = l.degree;
    let outcome = (|| {
        let se = cis::comm(d + 1).sub(&Cis::p1(d + 1))?;
        let fam = cis::bidecorated_family(&se, &cis::comm(d + 1), d)?;
        let b = block(SpeciesName::Comm);
        for (bk, k) in [
            (cis::BiKind::Ar, Kind::Rooted),
            (cis::BiKind::Br, Kind::Rooted),
            (cis::BiKind::Hollow, Kind::Hollow),
            (cis::BiKind::EdgePointed, Kind::EdgePointed),
            (cis::BiKind::RootedEdgePointed, Kind::RootedEdgePointed),
            (cis::BiKind::Plain, Kind::Plain),
        ] {
            if let Some(why) = cis_diff(fam.get(bk), &cis::decorated_cis(k, &b, d)?) {
                return Ok(Some(format!("{}: {why}", bk.as_str())));
            }
        }
        Ok(None)
    })();
    r.check(
        s,
        &format!("Comm vertex decorations reduce to edge decorations, degree <= {d}"),
        outcome,
    );
    r.identities(s, cis::hac_relations(d));
    r.identities(s, cis::hal_relations(d));
}
