//! Orchestration: job specs, the two computation paths side by side, and
//! the verification sweeps.
//!
//! Every runner is a pure function of its inputs (the cache only memoizes
//! values that are recomputed bit-identically), rows are emitted in a fixed
//! order, and reports are deterministic byte for byte.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cache::Cache;
use crate::dirichlet::{
    analytic_order, enumerate_characters, special_value_with, unit_basis, BernoulliPoly,
    DirichletCharacter,
};
use crate::error::{Error, Result};
use crate::exact::numtheory::euler_phi;
use crate::exact::{Cyclotomic, Rational};
use crate::groups::{induce, restrict, Character, FiniteGroup, MatrixRep};
use crate::kmodel::{
    gross_order, gross_order_via_pipeline, k_theory_graded, quillen_borel_ranks, verify_cofiber,
    DEFAULT_N_MAX,
};
use crate::places::EmbeddingSet;
use crate::report::{
    ArtinReport, CategoryStat, CharacterInfo, CharactersReport, EulerEntry, GrossReport,
    RankRow, RanksReport, Report, ReportRow, Signature, VerifyReport, ZetaReport, ZetaRow,
};

/// A fully specified unit of work, one mode per job.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum JobSpec {
    Ranks {
        r1: u64,
        r2: u64,
        #[serde(default = "default_n_max")]
        n_max: u32,
    },
    Characters { modulus: u64 },
    Gross {
        modulus: u64,
        char_index: u64,
        #[serde(default = "default_n_max")]
        n_max: u32,
    },
    Zeta {
        modulus: u64,
        #[serde(default = "default_n_max")]
        n_max: u32,
    },
    Artin {
        input: PathBuf,
        #[serde(default)]
        euler: bool,
    },
    Verify {
        n_upto: u64,
        degree_upto: u32,
    },
}

fn default_n_max() -> u32 {
    DEFAULT_N_MAX
}

/// Shared run state: an optional on-disk cache for character tables and
/// Bernoulli polynomials.
#[derive(Debug, Default)]
pub struct RunContext {
    cache: Option<Cache>,
}

impl RunContext {
    pub fn without_cache() -> Self {
        RunContext { cache: None }
    }

    pub fn with_cache(dir: impl Into<PathBuf>) -> Result<Self> {
        Ok(RunContext {
            cache: Some(Cache::open(dir)?),
        })
    }

    pub fn characters(&self, modulus: u64) -> Vec<DirichletCharacter> {
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.load_characters(modulus) {
                return hit;
            }
        }
        let fresh = enumerate_characters(modulus);
        if let Some(cache) = &self.cache {
            let _ = cache.store_characters(modulus, &fresh);
        }
        fresh
    }

    pub fn bernoulli(&self, degree: u32) -> BernoulliPoly {
        if let Some(cache) = &self.cache {
            if let Some(hit) = cache.load_bernoulli(degree) {
                return hit;
            }
        }
        let fresh = crate::dirichlet::bernoulli_polynomial(degree);
        if let Some(cache) = &self.cache {
            let _ = cache.store_bernoulli(&fresh);
        }
        fresh
    }

    /// Exact `L(1 - n, chi)` for primitive `chi`, through the cached
    /// Bernoulli polynomial.
    pub fn special_value(&self, chi: &DirichletCharacter, n: u32) -> Result<Cyclotomic> {
        special_value_with(chi, n, &self.bernoulli(n))
    }
}

/// Dispatch a job to its runner.
pub fn run_job(ctx: &RunContext, job: &JobSpec) -> Result<Report> {
    match job {
        JobSpec::Ranks { r1, r2, n_max } => run_ranks(*r1, *r2, *n_max),
        JobSpec::Characters { modulus } => run_characters(ctx, *modulus),
        JobSpec::Gross {
            modulus,
            char_index,
            n_max,
        } => run_gross(ctx, *modulus, *char_index, *n_max),
        JobSpec::Zeta { modulus, n_max } => run_zeta(ctx, *modulus, *n_max),
        JobSpec::Artin { input, euler } => {
            let raw = std::fs::read_to_string(input)?;
            run_artin(&raw, *euler)
        }
        JobSpec::Verify {
            n_upto,
            degree_upto,
        } => run_verify(ctx, *n_upto, *degree_upto),
    }
}

pub fn run_ranks(r1: u64, r2: u64, n_max: u32) -> Result<Report> {
    let ranks = quillen_borel_ranks(r1, r2, n_max)?;
    let rows = ranks
        .iter()
        .enumerate()
        .map(|(k, &rank)| RankRow {
            n: k as u32 + 1,
            s: 1 - (k as i64 + 1),
            rank,
        })
        .collect();
    Ok(Report::Ranks(RanksReport { r1, r2, n_max, rows }))
}

fn indexing_note() -> String {
    "characters are indexed by exponent tuples over the generator basis, \
     first generator varying fastest"
        .to_string()
}

pub fn run_characters(ctx: &RunContext, modulus: u64) -> Result<Report> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let basis = unit_basis(modulus);
    let characters = ctx
        .characters(modulus)
        .into_iter()
        .enumerate()
        .map(|(i, chi)| CharacterInfo {
            index: i as u64,
            conductor: chi.conductor(),
            parity: chi.parity(),
            is_primitive: chi.is_primitive(),
            character: chi,
        })
        .collect();
    Ok(Report::Characters(CharactersReport {
        modulus,
        generator_basis: basis.generators,
        indexing: indexing_note(),
        characters,
    }))
}

pub fn run_gross(ctx: &RunContext, modulus: u64, char_index: u64, n_max: u32) -> Result<Report> {
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let characters = ctx.characters(modulus);
    let phi = euler_phi(modulus);
    let chi = characters
        .get(char_index as usize)
        .ok_or(Error::CharacterIndexOutOfRange {
            index: char_index,
            modulus,
            phi,
        })?;
    let primitive = chi.primitive_part();
    let group_chi = chi.to_group_character();
    let torsor = EmbeddingSet::cyclotomic_torsor(modulus)?;
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut all_match = true;
    for n in 1..=n_max {
        let gross = gross_order(&torsor, &group_chi, n)?;
        let analytic = analytic_order(&primitive, n)?;
        let l_value = ctx.special_value(&primitive, n)?;
        let matches = gross == analytic;
        all_match &= matches;
        rows.push(ReportRow {
            n,
            s: 1 - n as i64,
            gross_dim: Some(gross),
            analytic_ord: Some(analytic),
            l_value: Some(l_value),
            matches: Some(matches),
        });
    }
    Ok(Report::Gross(GrossReport {
        modulus,
        char_index,
        generator_basis: unit_basis(modulus).generators,
        indexing: indexing_note(),
        conductor: chi.conductor(),
        parity: chi.parity(),
        value_order: chi.value_order(),
        n_max,
        rows,
        all_match,
    }))
}

pub fn run_zeta(ctx: &RunContext, modulus: u64, n_max: u32) -> Result<Report> {
    let _ = ctx;
    if modulus == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    let embeddings = EmbeddingSet::cyclotomic_embeddings(modulus)?;
    let (r1, r2) = embeddings.signature()?;
    let ranks = quillen_borel_ranks(r1, r2, n_max)?;
    let trivial = Character::trivial(Arc::clone(embeddings.group()));
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut all_match = true;
    for (k, &rank) in ranks.iter().enumerate() {
        let n = k as u32 + 1;
        let gross = gross_order(&embeddings, &trivial, n)?;
        let matches = gross == rank;
        all_match &= matches;
        rows.push(ZetaRow {
            n,
            s: 1 - n as i64,
            rank,
            gross_dim: gross,
            matches,
        });
    }
    Ok(Report::Zeta(ZetaReport {
        modulus,
        signature: Signature { r1, r2 },
        n_max,
        rows,
        all_match,
    }))
}

// ---------------------------------------------------------------------------
// artin mode: JSON job ingestion
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArtinInput {
    group: GroupInput,
    embeddings: EmbeddingsInput,
    representation: RepresentationInput,
    #[serde(default = "default_n_max")]
    n_max: u32,
    #[serde(default)]
    euler_data: Vec<EulerInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupInput {
    size: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "construction", rename_all = "lowercase", deny_unknown_fields)]
enum EmbeddingsInput {
    Torsor {
        conjugation: usize,
    },
    Tables {
        size: usize,
        g_action: Vec<Vec<usize>>,
        involution: Vec<usize>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationInput {
    cyclotomic_order: u64,
    #[serde(default)]
    character: Option<Vec<serde_json::Value>>,
    #[serde(default)]
    matrices: Option<MatricesInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatricesInput {
    dim: usize,
    images: Vec<Vec<serde_json::Value>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EulerInput {
    inertia: Vec<usize>,
    frob: usize,
}

/// Parse one cyclotomic entry: either a rational string "a/b" or a full
/// coefficient array over the power basis of the stated order.
fn parse_cyclo(order: u64, value: &serde_json::Value) -> Result<Cyclotomic> {
    match value {
        serde_json::Value::String(s) => {
            let q = Rational::from_str(s)
                .map_err(|e| Error::Schema(format!("bad rational {s:?}: {e}")))?;
            Ok(Cyclotomic::from_rational(q))
        }
        serde_json::Value::Number(x) => {
            let n = x
                .as_i64()
                .ok_or_else(|| Error::Schema(format!("non-integer number {x}")))?;
            Ok(Cyclotomic::from_integer(n))
        }
        serde_json::Value::Array(items) => {
            let coeffs = items
                .iter()
                .map(|item| match item {
                    serde_json::Value::String(s) => Rational::from_str(s)
                        .map_err(|e| Error::Schema(format!("bad rational {s:?}: {e}"))),
                    serde_json::Value::Number(x) => x
                        .as_i64()
                        .map(|n| Rational::from_integer(n.into()))
                        .ok_or_else(|| Error::Schema(format!("non-integer number {x}"))),
                    other => Err(Error::Schema(format!(
                        "coefficient must be a string or integer, got {other}"
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            Cyclotomic::from_coeffs(order, coeffs)
                .map_err(|e| Error::Schema(format!("bad coefficient vector: {e}")))
        }
        other => Err(Error::Schema(format!(
            "cyclotomic entry must be a string, integer, or coefficient array, got {other}"
        ))),
    }
}

/// Run the artin mode on a raw JSON job description.
pub fn run_artin(input_json: &str, include_euler: bool) -> Result<Report> {
    let input: ArtinInput =
        serde_json::from_str(input_json).map_err(|e| Error::Schema(e.to_string()))?;
    if input.group.table.len() != input.group.size {
        return Err(Error::Schema(format!(
            "group.size is {} but the table has {} rows",
            input.group.size,
            input.group.table.len()
        )));
    }
    let group = FiniteGroup::from_table(input.group.table, input.group.identity)?;
    let embeddings = match input.embeddings {
        EmbeddingsInput::Torsor { conjugation } => {
            EmbeddingSet::from_galois_over_q(&group, conjugation)?
        }
        EmbeddingsInput::Tables {
            size,
            g_action,
            involution,
        } => EmbeddingSet::from_tables(&group, size, g_action, involution)?,
    };
    let order = input.representation.cyclotomic_order;
    if order == 0 {
        return Err(Error::Schema("cyclotomic_order must be positive".into()));
    }
    let (character, rep) = match (&input.representation.character, &input.representation.matrices)
    {
        (Some(values), None) => {
            if values.len() != group.size() {
                return Err(Error::Schema(format!(
                    "character needs {} values, got {}",
                    group.size(),
                    values.len()
                )));
            }
            let parsed = values
                .iter()
                .map(|v| parse_cyclo(order, v))
                .collect::<Result<Vec<_>>>()?;
            let chi = Character::new(Arc::clone(&group), parsed)?;
            chi.degree()?;
            // a degree-1 character doubles as its own matrix form
            let rep = if chi.degree()? == 1 {
                Some(MatrixRep::from_linear_character(&chi)?)
            } else {
                None
            };
            (chi, rep)
        }
        (None, Some(matrices)) => {
            let d = matrices.dim;
            if matrices.images.len() != group.size() {
                return Err(Error::Schema(format!(
                    "matrices.images needs {} entries, got {}",
                    group.size(),
                    matrices.images.len()
                )));
            }
            let images = matrices
                .images
                .iter()
                .map(|flat| {
                    if flat.len() != d * d {
                        return Err(Error::Schema(format!(
                            "each image needs {} row-major entries, got {}",
                            d * d,
                            flat.len()
                        )));
                    }
                    let entries = flat
                        .iter()
                        .map(|v| parse_cyclo(order, v))
                        .collect::<Result<Vec<_>>>()?;
                    crate::exact::CycloMatrix::new(d, d, entries)
                })
                .collect::<Result<Vec<_>>>()?;
            let rep = MatrixRep::new(Arc::clone(&group), images)?;
            // character derived from traces, then validated
            let chi = rep.character()?;
            chi.degree()?;
            (chi, Some(rep))
        }
        _ => {
            return Err(Error::Schema(
                "representation needs exactly one of `character` or `matrices`".into(),
            ))
        }
    };
    let (r1, r2) = embeddings.signature()?;
    let mut rows = Vec::with_capacity(input.n_max as usize);
    for n in 1..=input.n_max {
        let gross = gross_order(&embeddings, &character, n)?;
        rows.push(ReportRow {
            n,
            s: 1 - n as i64,
            gross_dim: Some(gross),
            analytic_ord: None,
            l_value: None,
            matches: None,
        });
    }
    let euler = if include_euler {
        let rep = rep.as_ref().ok_or_else(|| {
            Error::Schema(
                "euler factors need explicit matrices (or a 1-dimensional character)".into(),
            )
        })?;
        let entries = input
            .euler_data
            .iter()
            .map(|e| {
                let factor = rep.euler_factor(&e.inertia, e.frob)?;
                Ok(EulerEntry {
                    inertia: e.inertia.clone(),
                    frob: e.frob,
                    fixed_dim: factor.degree().unwrap_or(0) as u64,
                    factor,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Some(entries)
    } else {
        None
    };
    let cofiber = verify_cofiber(&embeddings, input.n_max)?;
    Ok(Report::Artin(ArtinReport {
        group_size: group.size(),
        embedding_size: embeddings.size(),
        signature: Signature { r1, r2 },
        representation_degree: character.degree()?,
        n_max: input.n_max,
        rows,
        cofiber,
        euler,
    }))
}

// ---------------------------------------------------------------------------
// verify mode
// ---------------------------------------------------------------------------

struct Tally {
    categories: BTreeMap<String, CategoryStat>,
    failures: Vec<String>,
    total: u64,
    failed: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            categories: BTreeMap::new(),
            failures: Vec::new(),
            total: 0,
            failed: 0,
        }
    }

    fn check(&mut self, category: &str, pass: bool, describe: impl FnOnce() -> String) {
        let stat = self.categories.entry(category.to_string()).or_default();
        stat.checks += 1;
        self.total += 1;
        if !pass {
            stat.failures += 1;
            self.failed += 1;
            if self.failures.len() < 64 {
                self.failures.push(format!("[{category}] {}", describe()));
            }
        }
    }
}

/// The full verification sweep: every check the acceptance gate runs, over
/// all moduli up to `n_upto` and all `n` up to `degree_upto`.
pub fn run_verify(ctx: &RunContext, n_upto: u64, degree_upto: u32) -> Result<Report> {
    if n_upto == 0 || degree_upto == 0 {
        return Err(Error::InvalidArgument(
            "verification bounds must be positive".into(),
        ));
    }
    let mut tally = Tally::new();

    for modulus in 1..=n_upto {
        let characters = ctx.characters(modulus);
        let phi = euler_phi(modulus);
        tally.check(
            "character_enumeration",
            characters.len() as u64 == phi,
            || format!("modulus {modulus}: expected {phi} characters"),
        );
        for (i, a) in characters.iter().enumerate() {
            for b in &characters[i + 1..] {
                tally.check("character_enumeration", a != b, || {
                    format!("modulus {modulus}: duplicate characters")
                });
            }
        }
        for a in &characters {
            for b in &characters {
                let p = a.product(b).expect("same modulus");
                tally.check("character_enumeration", characters.contains(&p), || {
                    format!("modulus {modulus}: products escape the character set")
                });
            }
        }

        // orthogonality of the transported group characters
        let group_chars: Vec<Character> =
            characters.iter().map(|c| c.to_group_character()).collect();
        for (i, a) in group_chars.iter().enumerate() {
            for (j, b) in group_chars.iter().enumerate() {
                let ip = a.inner_product(b).expect("same group");
                let expected = if i == j {
                    Cyclotomic::one(1)
                } else {
                    Cyclotomic::zero(1)
                };
                tally.check("orthogonality", ip == expected, || {
                    format!("modulus {modulus}: <chi_{i}, chi_{j}> = {ip}")
                });
            }
        }

        // the two order-of-vanishing routes, their pipeline variant, the
        // self-audit of the analytic rule, and modulus independence
        let torsor = EmbeddingSet::cyclotomic_torsor(modulus)?;
        for (i, chi) in characters.iter().enumerate() {
            let primitive = chi.primitive_part();
            let group_chi = &group_chars[i];
            let conductor = chi.conductor();
            let conductor_torsor = if conductor != modulus {
                Some(EmbeddingSet::cyclotomic_torsor(conductor)?)
            } else {
                None
            };
            for n in 1..=degree_upto {
                let gross = gross_order(&torsor, group_chi, n)?;
                let analytic = analytic_order(&primitive, n)?;
                tally.check("gross_vs_analytic", gross == analytic, || {
                    format!("modulus {modulus}, character {i}, n = {n}: {gross} vs {analytic}")
                });
                let pipeline = gross_order_via_pipeline(&torsor, group_chi, n)?;
                tally.check("graded_pipeline", gross == pipeline, || {
                    format!("modulus {modulus}, character {i}, n = {n}: {gross} vs {pipeline}")
                });
                let value = ctx.special_value(&primitive, n)?;
                tally.check(
                    "trivial_zero_consistency",
                    (analytic == 1) == value.is_zero(),
                    || {
                        format!(
                            "modulus {modulus}, character {i}, n = {n}: order {analytic} \
                             but L = {value}"
                        )
                    },
                );
                if let Some(small) = &conductor_torsor {
                    let small_chi = primitive.to_group_character();
                    let small_gross = gross_order(small, &small_chi, n)?;
                    tally.check("modulus_independence", gross == small_gross, || {
                        format!(
                            "character {i} mod {modulus} vs conductor {conductor}, n = {n}: \
                             {gross} vs {small_gross}"
                        )
                    });
                }
            }
        }

        // cofiber bookkeeping on the torsor data
        let cofiber = verify_cofiber(&torsor, degree_upto)?;
        for c in &cofiber.checks {
            tally.check("cofiber", c.pass, || {
                format!("modulus {modulus}, degree {}: {}", c.degree, c.description)
            });
        }

        // eigenspace characters against the explicit-basis oracle
        for parity in 0..2i64 {
            let chi = torsor.y_character(parity);
            let (_, actions) = torsor.y_space(parity)?;
            let mut ok = true;
            for g in 0..torsor.group().size() {
                ok &= &actions[g].trace()? == chi.value(g);
            }
            tally.check("eigenspace_oracle", ok, || {
                format!("modulus {modulus}, parity {parity}: trace mismatch")
            });
        }

        // rank table against the trivial-coefficient orders on the
        // conjugation-only embedding data
        let embeddings = EmbeddingSet::cyclotomic_embeddings(modulus)?;
        let (r1, r2) = embeddings.signature()?;
        let ranks = quillen_borel_ranks(r1, r2, degree_upto)?;
        let trivial = Character::trivial(Arc::clone(embeddings.group()));
        for (k, &rank) in ranks.iter().enumerate() {
            let n = k as u32 + 1;
            let gross = gross_order(&embeddings, &trivial, n)?;
            tally.check("zeta_ranks", gross == rank, || {
                format!("modulus {modulus}, n = {n}: table {rank} vs invariants {gross}")
            });
            let graded = k_theory_graded(&embeddings, degree_upto.max(n));
            tally.check("degree_matching", graded.dim(2 * n - 1) == rank, || {
                format!("modulus {modulus}, n = {n}: graded degree vs rank table")
            });
        }

        // frobenius reciprocity over the unit group's subgroup lattice,
        // with a trimmed but representative set of subgroup characters
        if modulus >= 3 {
            let group = group_chars[0].group().clone();
            for elements in group.all_subgroups() {
                let sub = group.subgroup(&elements)?;
                let mut psis = vec![Character::trivial(Arc::clone(sub.group()))];
                if group_chars.len() > 1 {
                    psis.push(restrict(&group_chars[1], &sub)?);
                    psis.push(restrict(group_chars.last().unwrap(), &sub)?);
                }
                for psi in &psis {
                    for chi in &group_chars {
                        let lhs = induce(&sub, psi)?.inner_product(chi)?;
                        let rhs = psi.inner_product(&restrict(chi, &sub)?)?;
                        tally.check("frobenius_reciprocity", lhs == rhs, || {
                            format!(
                                "modulus {modulus}, subgroup of order {}: {lhs} vs {rhs}",
                                sub.order()
                            )
                        });
                    }
                }
            }
        }
    }

    // one non-abelian reciprocity instance alongside the unit-group sweep
    if n_upto >= 3 {
        let s3 = FiniteGroup::symmetric(3);
        let regular = Character::regular(Arc::clone(&s3));
        let trivial = Character::trivial(Arc::clone(&s3));
        for elements in s3.all_subgroups() {
            let sub = s3.subgroup(&elements)?;
            let psis = vec![
                Character::trivial(Arc::clone(sub.group())),
                restrict(&regular, &sub)?,
            ];
            for psi in &psis {
                for chi in [&trivial, &regular] {
                    let lhs = induce(&sub, psi)?.inner_product(chi)?;
                    let rhs = psi.inner_product(&restrict(chi, &sub)?)?;
                    tally.check("frobenius_reciprocity", lhs == rhs, || {
                        format!("symmetric group, subgroup of order {}", sub.order())
                    });
                }
            }
        }
    }

    let passed = tally.failed == 0;
    Ok(Report::Verify(VerifyReport {
        n_upto,
        degree_upto,
        total_checks: tally.total,
        total_failures: tally.failed,
        categories: tally.categories,
        failures: tally.failures,
        passed,
    }))
}
