//! The registered verification suites.

use std::collections::HashSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::classify::{
    cap_prod, is_generalized_cm, lemma_akhar_check, split_maximal_component, theorem_th_classify,
};
use crate::codim1::{check_lemma_loc_hypothesis, is_connected_codim_one, lemma_loc_equivalence};
use crate::decompose::{
    associated_prime_masks, is_equidimensional, is_unmixed, minimal_prime_masks, primary_decomposition,
    MonomialPrime,
};
use crate::error::{Error, Result};
use crate::harness::enumerate::{
    prime_power_intersections, random_ideal, random_single_degree_ideal, squarefree_antichains,
    veronese_type_ideals, MonomialTable,
};
use crate::harness::{Budget, SuiteParams, SuiteReport, Tally};
use crate::ideal::{Monomial, MonomialIdeal, VarMask, VariableSet};
use crate::localize::{killing, localization_via_components, monomial_localization};
use crate::oracle::homology::Field;
use crate::oracle::polarize::polarized_variable_count;
use crate::oracle::reisner::is_cm_reisner;
use crate::polymatroid::{is_matroidal, is_polymatroidal, is_squarefree_veronese, recognize_cm_shape};

pub const SUITES: [&str; 17] = [
    "poly2",
    "xjd",
    "veronese-type",
    "pc",
    "gc",
    "d2-support",
    "lemma-h",
    "lemma-loc",
    "prop2",
    "mat1",
    "thm-mat",
    "exc",
    "cap-prod",
    "thm-th",
    "akhar",
    "oracle-agreement",
    "remark-q",
];

/// Raw subset tables larger than this many monomials are not enumerated.
const MAX_TABLE: usize = 20;
/// Largest table whose every subset is classified, polymatroidal or not.
const RAW_CLASSIFY_TABLE: usize = 15;
const MASK_CHUNK: u64 = 1 << 12;
const ITEM_CHUNK: usize = 64;
const RANDOM_INSTANCES: usize = 1000;

/// Default `(n_max, d_max)` per suite.
fn defaults(name: &str) -> (usize, u32) {
    match name {
        "poly2" | "prop2" | "akhar" => (5, 2),
        "pc" => (5, 4),
        "gc" | "xjd" | "d2-support" | "lemma-h" | "veronese-type" => (4, 4),
        "lemma-loc" => (5, 5),
        "mat1" | "thm-mat" => (6, 4),
        "exc" => (5, 5),
        "cap-prod" => (4, 3),
        "thm-th" => (4, 4),
        "oracle-agreement" => (4, 3),
        "remark-q" => (3, 3),
        _ => (0, 0),
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    if !SUITES.contains(&name) {
        return Err(Error::UnknownSuite(name.to_string()));
    }
    let (dn, dd) = defaults(name);
    let n = params.n.unwrap_or(dn);
    let d = params.d.unwrap_or(dd);
    let budget = Budget::new(params.budget);
    let start = Instant::now();
    let tally = match name {
        "poly2" => poly2(n, &budget)?,
        "xjd" => xjd(n, d, &budget)?,
        "veronese-type" => veronese_type_suite(n, d, &budget)?,
        "pc" => pc(n, d, &budget)?,
        "gc" => gc(n, d, &budget)?,
        "d2-support" => d2_support(n, d, &budget)?,
        "lemma-h" => lemma_h(n, d, &budget)?,
        "lemma-loc" => lemma_loc(n, d, &budget)?,
        "prop2" => prop2(n, &budget)?,
        "mat1" => mat1(n, d, &budget)?,
        "thm-mat" => thm_mat(n, d, &budget)?,
        "exc" => exc(n, d, &budget)?,
        "cap-prod" => cap_prod_suite(n, d, params.seed, &budget)?,
        "thm-th" => thm_th(n, d, &budget)?,
        "akhar" => akhar(n, &budget)?,
        "oracle-agreement" => oracle_agreement(n, d, &budget)?,
        "remark-q" => remark_q(n, d, params.seed, &budget)?,
        _ => unreachable!("suite names are checked above"),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        n_max: n,
        d_max: d,
        population: tally.population,
        counts: tally.counts,
        counterexamples: tally.counterexamples,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs `f` over chunks of `items` in parallel and merges the tallies in order.
fn over_items<T, F>(items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T, &mut Tally) -> Result<()> + Sync,
{
    let parts = items
        .par_chunks(ITEM_CHUNK)
        .map(|chunk| {
            let mut t = Tally::default();
            for item in chunk {
                t.population += 1;
                f(item, &mut t)?;
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(Tally::default(), Tally::merge))
}

/// Runs `f` on every nonempty subset of `table` accepted by `screen`, in parallel over mask ranges.
fn over_subsets<S, F>(table: &MonomialTable, budget: &Budget, screen: S, f: F) -> Result<Tally>
where
    S: Fn(&MonomialTable, u64) -> bool + Sync,
    F: Fn(&MonomialIdeal, &mut Tally) -> Result<()> + Sync,
{
    let end = 1u64 << table.len();
    budget.charge(end - 1)?;
    let starts: Vec<u64> = (0..end.div_ceil(MASK_CHUNK)).map(|c| c * MASK_CHUNK).collect();
    let parts = starts
        .par_iter()
        .map(|&lo| {
            let mut t = Tally::default();
            for s in lo.max(1)..(lo + MASK_CHUNK).min(end) {
                t.population += 1;
                if screen(table, s) {
                    f(&table.ideal(s), &mut t)?;
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(parts.into_iter().fold(Tally::default(), Tally::merge))
}

/// Polymatroidal subsets of a table, in mask order.
fn polymatroidal_subsets(table: &MonomialTable, budget: &Budget) -> Result<Vec<MonomialIdeal>> {
    let end = 1u64 << table.len();
    budget.charge(end - 1)?;
    let starts: Vec<u64> = (0..end.div_ceil(MASK_CHUNK)).map(|c| c * MASK_CHUNK).collect();
    let parts: Vec<Vec<MonomialIdeal>> = starts
        .par_iter()
        .map(|&lo| {
            (lo.max(1)..(lo + MASK_CHUNK).min(end))
                .filter(|&s| table.is_polymatroidal(s))
                .map(|s| table.ideal(s))
                .collect()
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

fn tables(n_max: usize, degrees: impl Iterator<Item = u32> + Clone, squarefree: bool) -> Result<Vec<MonomialTable>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for d in degrees.clone() {
            let t = MonomialTable::new(n, d, squarefree)?;
            if !t.is_empty() && t.len() <= MAX_TABLE {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// Enumerated polymatroidal ideals in at most `n` variables, degree at most `d`:
/// Veronese-type ideals, single-degree intersections of at most three prime
/// powers with a power of `m`, and all polymatroidal subsets of small monomial tables.
fn polymatroidal_population(n_max: usize, d_max: u32, budget: &Budget) -> Result<Vec<MonomialIdeal>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |i: MonomialIdeal, out: &mut Vec<MonomialIdeal>| {
        if seen.insert(i.clone()) {
            out.push(i);
        }
    };
    for n in 1..=n_max {
        for d in 1..=d_max {
            for (_, i) in veronese_type_ideals(n, d) {
                push(i, &mut out);
            }
        }
    }
    for n in 2..=n_max {
        let candidates = prime_power_intersections(n, 3, d_max)?;
        budget.charge(candidates.len() as u64)?;
        let kept: Vec<MonomialIdeal> = candidates
            .into_par_iter()
            .filter(|i| {
                i.single_degree().ok().flatten().is_some_and(|d| d <= d_max)
                    && is_polymatroidal(i).is_ok_and(|v| v.holds())
            })
            .collect();
        for i in kept {
            push(i, &mut out);
        }
    }
    for t in tables(n_max, 1..=d_max, false)? {
        for i in polymatroidal_subsets(&t, budget)? {
            push(i, &mut out);
        }
    }
    budget.charge(out.len() as u64)?;
    Ok(out)
}

/// Matroidal ideals in `n` variables of each degree in `degrees`, `n <= n_max`.
fn matroidal_population(n_max: usize, degrees: impl Iterator<Item = u32> + Clone, budget: &Budget) -> Result<Vec<MonomialIdeal>> {
    let mut out = Vec::new();
    for t in tables(n_max, degrees, true)? {
        out.extend(polymatroidal_subsets(&t, budget)?);
    }
    Ok(out)
}

fn degree_two_tables(n_max: usize) -> Result<Vec<MonomialTable>> {
    tables(n_max, 2..=2, false)
}

fn kill_single(i: &MonomialIdeal, x: usize) -> MonomialIdeal {
    killing(i, VarMask::single(x))
}

fn poly2(n: usize, budget: &Budget) -> Result<Tally> {
    let mut total = Tally::default();
    for t in degree_two_tables(n)? {
        let m2 = MonomialIdeal::maximal_power(t.vars.clone(), 2);
        let part = over_subsets(&t, budget, MonomialTable::is_polymatroidal, |i, tally| {
            tally.count("polymatroidal");
            if !i.is_fully_supported() || !is_unmixed(i)? {
                return Ok(());
            }
            tally.count("unmixed_fully_supported");
            tally.check(is_matroidal(i)? || *i == m2, i, "unmixed degree-2 polymatroidal ideal neither matroidal nor m^2");
            Ok(())
        })?;
        total = total.merge(part);
    }
    Ok(total)
}

fn xjd(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = polymatroidal_population(n, d, budget)?;
    over_items(&pop, |i, tally| {
        let deg = i.require_single_degree()?;
        let has_power = (0..i.nvars()).any(|j| i.contains(&Monomial::pure_power(i.nvars(), j, deg)));
        if !has_power || !i.is_fully_supported() || !is_unmixed(i)? {
            return Ok(());
        }
        tally.count("unmixed_with_pure_power");
        let md = MonomialIdeal::maximal_power(i.vars().clone(), deg);
        tally.check(*i == md, i, "unmixed ideal containing x_j^d differs from m^d");
        Ok(())
    })
}

fn veronese_type_suite(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let mut items = Vec::new();
    for k in 1..=n {
        for deg in 1..=d {
            items.extend(veronese_type_ideals(k, deg).into_iter().map(|(_, i)| i));
        }
    }
    budget.charge(items.len() as u64)?;
    over_items(&items, |i, tally| {
        tally.check(is_polymatroidal(i)?.holds(), i, "Veronese-type ideal fails the exchange property");
        let unmixed = is_unmixed(i)?;
        let no_embedded = associated_prime_masks(i)? == minimal_prime_masks(i)?;
        let cm = recognize_cm_shape(i)?.is_cm();
        if cm {
            tally.count("cm");
        }
        tally.check(
            unmixed == no_embedded && no_embedded == cm,
            i,
            &format!("unmixed={unmixed} no_embedded={no_embedded} cm={cm}"),
        );
        Ok(())
    })
}

fn pc(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let mut total = Tally::default();
    for t in tables(n, 1..=d, true)? {
        let part = over_subsets(&t, budget, |_, _| true, |i, tally| {
            let matroidal = t.is_polymatroidal(mask_of(&t, i));
            let connected = matroidal && is_connected_codim_one(i)?.connected;
            let veronese = is_squarefree_veronese(i);
            if matroidal {
                tally.count("matroidal");
            }
            if veronese {
                tally.count("squarefree_veronese");
            }
            tally.check(
                (matroidal && connected) == veronese,
                i,
                &format!("matroidal={matroidal} connected={connected} squarefree_veronese={veronese}"),
            );
            Ok(())
        })?;
        total = total.merge(part);
    }
    Ok(total)
}

fn mask_of(table: &MonomialTable, ideal: &MonomialIdeal) -> u64 {
    ideal
        .gens()
        .iter()
        .map(|g| 1u64 << table.monomials.iter().position(|m| m == g).expect("generator from table"))
        .fold(0, |a, b| a | b)
}

fn gc(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = polymatroidal_population(n, d, budget)?;
    over_items(&pop, |i, tally| {
        let cm = recognize_cm_shape(i)?.is_cm();
        let connected = is_connected_codim_one(i)?.connected;
        if cm {
            tally.count("cm");
            tally.check(connected, i, "Cohen-Macaulay but not connected in codimension one");
            tally.check(is_generalized_cm(i)?.generalized_cm, i, "Cohen-Macaulay but not generalized CM");
        }
        if is_unmixed(i)? {
            tally.count("unmixed");
            tally.check(connected == cm, i, &format!("unmixed with connected={connected} cm={cm}"));
        }
        Ok(())
    })
}

fn d2_support(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = polymatroidal_population(n, d, budget)?;
    over_items(&pop, |i, tally| {
        if !i.is_fully_supported() || !is_unmixed(i)? || !is_connected_codim_one(i)?.connected {
            return Ok(());
        }
        tally.count("unmixed_connected");
        let full = i.vars().full_mask();
        for x in 0..i.nvars() {
            let local = kill_single(i, x);
            let supp = if local.is_unit() { VarMask::EMPTY } else { local.support() };
            tally.check(
                supp.is_empty() || supp == full.without(x),
                i,
                &format!("support after killing {} is {:?}", i.vars().name(x), i.vars().mask_names(supp)),
            );
        }
        Ok(())
    })
}

fn lemma_h(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = polymatroidal_population(n, d, budget)?;
    over_items(&pop, |i, tally| {
        if !i.is_fully_supported() || i.is_squarefree() || !is_unmixed(i)? {
            return Ok(());
        }
        let h = crate::decompose::height(i)?;
        if h <= 1 {
            return Ok(());
        }
        tally.count("unmixed_non_squarefree");
        tally.check(h != i.nvars() - 1, i, "height equals n - 1");
        Ok(())
    })
}

fn lemma_loc(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = matroidal_population(n, 1..=d, budget)?;
    over_items(&pop, |i, tally| {
        for t in i.support().subsets().filter(|t| !t.is_empty()) {
            if check_lemma_loc_hypothesis(i, t).is_err() {
                continue;
            }
            tally.count("instances");
            let r = lemma_loc_equivalence(i, t)?;
            tally.check(r.agree(), i, &format!("T={:?} a={} b={} c={}", i.vars().mask_names(t), r.a, r.b, r.c));
        }
        Ok(())
    })
}

fn prop2(n: usize, budget: &Budget) -> Result<Tally> {
    let mut total = Tally::default();
    for t in degree_two_tables(n)? {
        let part = over_subsets(&t, budget, MonomialTable::is_polymatroidal, |i, tally| {
            tally.count("polymatroidal");
            let equi = is_equidimensional(i)?;
            let gcm = is_generalized_cm(i)?.generalized_cm;
            if gcm {
                tally.count("gcm");
            }
            // an unused variable survives every single-variable localization
            // untouched, so the equivalence needs full support
            if !i.is_fully_supported() {
                if equi != gcm {
                    tally.count("unsupported_variable_disagreements");
                }
                return Ok(());
            }
            tally.count("fully_supported");
            tally.check(equi == gcm, i, &format!("equidimensional={equi} gcm={gcm}"));
            Ok(())
        })?;
        total = total.merge(part);
    }
    Ok(total)
}

fn mat1(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = matroidal_population(n, 3..=d, budget)?;
    over_items(&pop, |i, tally| {
        if !i.is_fully_supported() || !is_generalized_cm(i)?.generalized_cm {
            return Ok(());
        }
        tally.count("fully_supported_gcm");
        let full = i.vars().full_mask();
        for x in 0..i.nvars() {
            let local = kill_single(i, x);
            let supp = if local.is_unit() { VarMask::EMPTY } else { local.support() };
            tally.check(supp == full.without(x), i, &format!("support after killing {}", i.vars().name(x)));
        }
        Ok(())
    })
}

fn thm_mat(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let pop = matroidal_population(n, 3..=d, budget)?;
    over_items(&pop, |i, tally| {
        tally.count("matroidal");
        let gcm = is_generalized_cm(i)?.generalized_cm;
        let cm = recognize_cm_shape(i)?.is_cm();
        if gcm {
            tally.count("gcm");
        }
        tally.check(gcm == cm, i, &format!("gcm={gcm} cm={cm}"));
        Ok(())
    })
}

fn exc(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let mut items = Vec::new();
    for k in 2..=n {
        let vars = VariableSet::indexed(k);
        for chain in squarefree_antichains(k, 2, budget.limit())? {
            let gens = chain.iter().map(|&m| Monomial::from_mask(k, m)).collect();
            items.push(MonomialIdeal::new(vars.clone(), gens)?);
        }
    }
    budget.charge(items.len() as u64 * u64::from(d))?;
    over_items(&items, |j, tally| {
        for deg in j.max_degree()..=d {
            let i = j.intersection(&MonomialIdeal::maximal_power(j.vars().clone(), deg))?;
            if !is_polymatroidal(&i)?.holds() {
                continue;
            }
            tally.count("polymatroidal_intersections");
            tally.check(is_matroidal(j)?, j, &format!("J not matroidal although J ∩ m^{deg} is polymatroidal"));
        }
        Ok(())
    })
}

fn cap_prod_suite(n: usize, d: u32, seed: u64, budget: &Budget) -> Result<Tally> {
    budget.charge(RANDOM_INSTANCES as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items: Vec<(MonomialIdeal, u32)> = (0..RANDOM_INSTANCES)
        .map(|_| {
            let k = rand::Rng::gen_range(&mut rng, 1..=n.max(1));
            let t = rand::Rng::gen_range(&mut rng, 1..=d.max(1));
            let j = random_single_degree_ideal(&mut rng, k, t, 6);
            let target = t + rand::Rng::gen_range(&mut rng, 0..=2);
            (j, target)
        })
        .collect();
    over_items(&items, |(j, target), tally| {
        tally.check(cap_prod(j, *target)?.holds(), j, &format!("J·m^(d-t) differs from J ∩ m^d for d={target}"));
        Ok(())
    })
}

fn thm_th(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let mut items: Vec<MonomialIdeal> = Vec::new();
    for t in tables(n, 1..=d, false)?.into_iter().filter(|t| t.len() <= RAW_CLASSIFY_TABLE) {
        budget.charge((1u64 << t.len()) - 1)?;
        items.extend((1..1u64 << t.len()).map(|s| t.ideal(s)).filter(MonomialIdeal::is_fully_supported));
    }
    let mut seen: HashSet<MonomialIdeal> = items.iter().cloned().collect();
    for i in polymatroidal_population(n, d, budget)? {
        if i.is_fully_supported() && seen.insert(i.clone()) {
            items.push(i);
        }
    }
    over_items(&items, |i, tally| {
        // J collects the non-maximal primary components; s = d exactly when m is associated
        let Some((j, s)) = split_maximal_component(i)? else {
            tally.count("maximal_component_not_a_power");
            return Ok(());
        };
        let r = theorem_th_classify(&j, s)?;
        if r.clauses.any() {
            tally.count("some_clause");
        }
        if r.generalized_cm {
            tally.count("gcm_polymatroidal");
        }
        tally.check(
            r.consistent(),
            i,
            &format!("s={s} clauses={:?} polymatroidal={} gcm={}", r.clauses.labels(), r.polymatroidal, r.generalized_cm),
        );
        Ok(())
    })
}

fn akhar(n: usize, budget: &Budget) -> Result<Tally> {
    let mut total = Tally::default();
    for t in degree_two_tables(n)? {
        let part = over_subsets(&t, budget, |t, s| t.support(s) == t.vars.full_mask(), |i, tally| {
            let r = lemma_akhar_check(i)?;
            if r.polymatroidal {
                tally.count("polymatroidal");
            }
            tally.check(r.agree(), i, &format!("pairwise_sums={} polymatroidal={}", r.pairwise_sums_maximal, r.polymatroidal));
            Ok(())
        })?;
        total = total.merge(part);
    }
    Ok(total)
}

fn oracle_agreement(n: usize, d: u32, budget: &Budget) -> Result<Tally> {
    let mut pop = Vec::new();
    for t in tables(n, 1..=d, false)? {
        pop.extend(polymatroidal_subsets(&t, budget)?);
    }
    pop.retain(|i| polarized_variable_count(i) <= 10);
    budget.charge(pop.len() as u64)?;
    over_items(&pop, |i, tally| {
        let shape = recognize_cm_shape(i)?.is_cm();
        let q = is_cm_reisner(i, Field::Rationals)?.cohen_macaulay;
        let f2 = is_cm_reisner(i, Field::Prime(2))?.cohen_macaulay;
        if shape {
            tally.count("cm");
        }
        if f2 == q {
            tally.count("f2_agrees_with_q");
        }
        tally.check(q == shape, i, &format!("reisner over Q={q}, shape recognizer={shape}"));
        tally.check(f2 == shape, i, &format!("reisner over F2={f2}, shape recognizer={shape}"));
        Ok(())
    })
}

fn remark_q_instance(i: &MonomialIdeal, tally: &mut Tally) -> Result<()> {
    let dec = primary_decomposition(i)?;
    let radical = i.radical();
    for keep in i.vars().full_mask().subsets().filter(|k| !k.is_empty()) {
        let prime = MonomialPrime::new(i.vars().clone(), keep);
        let local = monomial_localization(i, &prime)?;
        let via = localization_via_components(&dec, &prime)?;
        tally.check(local == via, i, &format!("localization at {:?} differs from kept components", prime.names()));
        let commutes = if local.is_unit() { monomial_localization(&radical, &prime)?.is_unit() } else {
            local.radical() == monomial_localization(&radical, &prime)?
        };
        tally.check(commutes, i, &format!("radical does not commute with localization at {:?}", prime.names()));
    }
    Ok(())
}

fn remark_q(n: usize, d: u32, seed: u64, budget: &Budget) -> Result<Tally> {
    let mut total = Tally::default();
    for t in tables(n, 1..=d, false)? {
        total = total.merge(over_subsets(&t, budget, |_, _| true, remark_q_instance)?);
    }
    budget.charge(RANDOM_INSTANCES as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<MonomialIdeal> = (0..RANDOM_INSTANCES)
        .map(|_| {
            let k = rand::Rng::gen_range(&mut rng, 2..=(n + 1).max(2));
            random_ideal(&mut rng, k, 5, d.max(1) + 1)
        })
        .collect();
    let mut part = over_items(&random, remark_q_instance)?;
    part.counts.insert("random_instances".into(), random.len() as u64);
    Ok(total.merge(part))
}
