//! Acceptance suite: one test per criterion, each printing a pass line.
//! Every tolerance is pinned here; the exact checks use zero tolerance and
//! the single smoke-numeric check uses the stated 1e-3 window.

use std::sync::Arc;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use artinl::dirichlet::{analytic_order, enumerate_characters, special_value};
use artinl::exact::numtheory::euler_phi;
use artinl::exact::{rat, Cyclotomic, CycloMatrix};
use artinl::groups::{induce, restrict, unit_group, Character, FiniteGroup, MatrixRep};
use artinl::kmodel::{gross_order, k_theory_graded, quillen_borel_ranks, verify_cofiber};
use artinl::places::EmbeddingSet;
use artinl::Rational;

#[test]
fn acceptance_1_main_theorem_sweep() {
    let start = Instant::now();
    let mut comparisons = 0u64;
    for modulus in 1..=24u64 {
        let torsor = EmbeddingSet::cyclotomic_torsor(modulus).unwrap();
        for chi in enumerate_characters(modulus) {
            let primitive = chi.primitive_part();
            let group_chi = chi.to_group_character();
            for n in 1..=6u32 {
                let gross = gross_order(&torsor, &group_chi, n).unwrap();
                let analytic = analytic_order(&primitive, n).unwrap();
                assert_eq!(
                    gross, analytic,
                    "modulus {modulus}, character order {}, n = {n}",
                    chi.value_order()
                );
                comparisons += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let expected: u64 = (1..=24u64).map(euler_phi).sum::<u64>() * 6;
    assert_eq!(comparisons, expected);
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "sweep took {elapsed:?}, budget is 10 s"
    );
    println!("ACCEPTANCE 1 (main-theorem sweep, {comparisons} comparisons in {elapsed:?}): PASS");
}

#[test]
fn acceptance_2_rank_tables_match_graded_degrees() {
    // embedding sets realizing each required signature
    let trivial = FiniteGroup::trivial();
    let c2 = FiniteGroup::cyclic(2);
    let sets: Vec<((u64, u64), EmbeddingSet)> = vec![
        ((1, 0), EmbeddingSet::from_galois_over_q(&trivial, 0).unwrap()),
        ((0, 1), EmbeddingSet::cyclotomic_torsor(4).unwrap()),
        ((0, 2), EmbeddingSet::cyclotomic_torsor(8).unwrap()),
        ((2, 0), EmbeddingSet::from_galois_over_q(&c2, 0).unwrap()),
        (
            (1, 1),
            EmbeddingSet::from_tables(&trivial, 3, vec![vec![0, 1, 2]], vec![0, 2, 1]).unwrap(),
        ),
    ];
    for ((r1, r2), s) in sets {
        assert_eq!(s.signature().unwrap(), (r1, r2));
        let table = quillen_borel_ranks(r1, r2, 8).unwrap();
        let graded = k_theory_graded(&s, 8);
        for (k, &rank) in table.iter().enumerate() {
            let n = k as u32 + 1;
            assert_eq!(
                graded.dim(2 * n - 1),
                rank,
                "signature ({r1}, {r2}), n = {n}"
            );
        }
    }
    println!("ACCEPTANCE 2 (rank tables vs graded degrees): PASS");
}

/// Independent fraction arithmetic for the zeta oracle, deliberately not
/// using the library's types.
#[derive(Clone, Copy, PartialEq, Debug)]
struct Frac(i64, i64);

impl Frac {
    fn new(n: i64, d: i64) -> Frac {
        fn gcd(a: i64, b: i64) -> i64 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(n, d).max(1);
        let sign = if d < 0 { -1 } else { 1 };
        Frac(sign * n / g, sign * d / g)
    }
    fn add(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.1 + o.0 * self.1, self.1 * o.1)
    }
    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.0 * o.0, self.1 * o.1)
    }
}

#[test]
fn acceptance_3_zeta_spot_values() {
    // oracle: the defining recurrence sum_{j<=k} C(k+1, j) B_j = 0, then
    // the value at 1 through the binomial sum, then division by n
    let binom = |n: i64, k: i64| -> i64 {
        let mut acc = 1i64;
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    };
    let mut b = vec![Frac::new(1, 1)];
    for k in 1..=4i64 {
        let mut acc = Frac::new(0, 1);
        for (j, bj) in b.iter().enumerate() {
            acc = acc.add(bj.mul(Frac::new(binom(k + 1, j as i64), 1)));
        }
        b.push(acc.mul(Frac::new(-1, k + 1)));
    }
    let oracle: Vec<Frac> = (1..=4i64)
        .map(|n| {
            let mut at_one = Frac::new(0, 1);
            for (k, bk) in b.iter().take(n as usize + 1).enumerate() {
                at_one = at_one.add(bk.mul(Frac::new(binom(n, k as i64), 1)));
            }
            at_one.mul(Frac::new(-1, n))
        })
        .collect();
    assert_eq!(
        oracle,
        vec![
            Frac::new(-1, 2),
            Frac::new(-1, 12),
            Frac::new(0, 1),
            Frac::new(1, 120)
        ]
    );

    let zeta = artinl::dirichlet::DirichletCharacter::trivial(1);
    for (i, expected) in oracle.iter().enumerate() {
        let got = special_value(&zeta, i as u32 + 1).unwrap();
        let want = Cyclotomic::from_rational(Rational::new(
            expected.0.into(),
            expected.1.into(),
        ));
        assert_eq!(got, want, "value at s = {}", -(i as i64));
    }
    // the order-1 zero at s = -2 is exact
    assert!(special_value(&zeta, 3).unwrap().is_zero());
    // L(0) of the odd character mod 4 is exactly 1/2
    let chi4 = enumerate_characters(4).remove(1);
    assert_eq!(
        special_value(&chi4, 1).unwrap(),
        Cyclotomic::from_rational(rat(1, 2))
    );
    println!("ACCEPTANCE 3 (zeta and L spot values, exact): PASS");
}

#[test]
fn acceptance_4_cofiber_verification() {
    for modulus in 1..=24u64 {
        let torsor = EmbeddingSet::cyclotomic_torsor(modulus).unwrap();
        let report = verify_cofiber(&torsor, 6).unwrap();
        assert!(report.pass, "modulus {modulus}");
        assert!(report.kernel_defect_trivial, "modulus {modulus}");
        assert!(report.cokernel_defect_trivial, "modulus {modulus}");
    }
    println!("ACCEPTANCE 4 (cofiber bookkeeping, moduli 1..24): PASS");
}

/// Random valid embedding set: disjoint torsor blocks (involution = left
/// multiplication by a square root of the identity) and paired blocks (two
/// copies swapped through an arbitrary element), over a random small unit
/// group.
fn random_embedding_set(rng: &mut StdRng) -> EmbeddingSet {
    let moduli = [3u64, 4, 5, 8, 12];
    let group = unit_group(moduli[rng.gen_range(0..moduli.len())]);
    let n = group.size();
    let involutive: Vec<usize> = (0..n)
        .filter(|&w| group.mul(w, w) == group.identity())
        .collect();
    let mut action_rows: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut involution: Vec<usize> = Vec::new();
    let mut size = 0usize;
    loop {
        let paired = rng.gen_bool(0.5);
        let block = if paired { 2 * n } else { n };
        if size + block > 16 {
            break;
        }
        let base = size;
        for (g, row) in action_rows.iter_mut().enumerate() {
            for p in 0..n {
                row.push(base + group.mul(p, g));
            }
            if paired {
                for p in 0..n {
                    row.push(base + n + group.mul(p, g));
                }
            }
        }
        if paired {
            let w = rng.gen_range(0..n);
            let w_inv = group.inv(w);
            for p in 0..n {
                involution.push(base + n + group.mul(w, p));
            }
            for p in 0..n {
                involution.push(base + group.mul(w_inv, p));
            }
        } else {
            let w = involutive[rng.gen_range(0..involutive.len())];
            for p in 0..n {
                involution.push(base + group.mul(w, p));
            }
        }
        size += block;
        if size >= 8 && rng.gen_bool(0.5) {
            break;
        }
    }
    EmbeddingSet::from_tables(&group, size, action_rows, involution)
        .expect("block constructions satisfy the invariants")
}

#[test]
fn acceptance_5_eigenspace_oracle_equivalence() {
    let mut sets: Vec<EmbeddingSet> = (1..=16u64)
        .map(|n| EmbeddingSet::cyclotomic_torsor(n).unwrap())
        .collect();
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for _ in 0..20 {
        sets.push(random_embedding_set(&mut rng));
    }
    for (i, s) in sets.iter().enumerate() {
        assert!(s.size() <= 16, "set {i}");
        for parity in 0..2i64 {
            let chi = s.y_character(parity);
            let (basis, actions) = s.y_space(parity).unwrap();
            assert_eq!(
                basis.cols() as u64,
                chi.degree().unwrap(),
                "set {i}, parity {parity}: basis size vs character degree"
            );
            for g in 0..s.group().size() {
                assert_eq!(
                    &actions[g].trace().unwrap(),
                    chi.value(g),
                    "set {i}, parity {parity}, element {g}"
                );
            }
        }
    }
    println!(
        "ACCEPTANCE 5 (eigenspace oracle, {} sets incl. 20 randomized): PASS",
        sets.len()
    );
}

fn abelian_zoo_up_to_16() -> Vec<(Vec<u64>, Arc<FiniteGroup>)> {
    let types: Vec<Vec<u64>> = vec![
        vec![1],
        vec![2],
        vec![3],
        vec![4],
        vec![2, 2],
        vec![5],
        vec![6],
        vec![7],
        vec![8],
        vec![4, 2],
        vec![2, 2, 2],
        vec![9],
        vec![3, 3],
        vec![10],
        vec![11],
        vec![12],
        vec![6, 2],
        vec![13],
        vec![14],
        vec![15],
        vec![16],
        vec![8, 2],
        vec![4, 4],
        vec![4, 2, 2],
        vec![2, 2, 2, 2],
    ];
    types
        .into_iter()
        .map(|orders| {
            let group = orders
                .iter()
                .map(|&d| FiniteGroup::cyclic(d as usize))
                .reduce(|a, b| FiniteGroup::direct_product(&a, &b))
                .unwrap();
            (orders, group)
        })
        .collect()
}

/// Mixed-radix digits of a product-group element index, matching the
/// left-fold used to build the product.
fn digits(mut index: usize, orders: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; orders.len()];
    for (i, &d) in orders.iter().enumerate().rev() {
        out[i] = (index % d as usize) as u64;
        index /= d as usize;
    }
    out
}

fn product_characters(orders: &[u64], group: &Arc<FiniteGroup>) -> Vec<Character> {
    let l = orders
        .iter()
        .fold(1u64, |acc, &d| artinl::exact::numtheory::lcm(acc, d));
    let total = group.size();
    (0..total)
        .map(|t| {
            let t_digits = digits(t, orders);
            let values = (0..total)
                .map(|x| {
                    let x_digits = digits(x, orders);
                    let e: u64 = t_digits
                        .iter()
                        .zip(&x_digits)
                        .zip(orders)
                        .map(|((&ti, &xi), &d)| ti * xi % d * (l / d) % l)
                        .sum::<u64>()
                        % l;
                    Cyclotomic::zeta_pow(l, e as i64)
                })
                .collect();
            Character::new(Arc::clone(group), values).expect("product characters are class functions")
        })
        .collect()
}

#[test]
fn acceptance_6_character_theory_suite() {
    // orthogonality over every modulus up to 24
    let mut orthogonality_checks = 0u64;
    for modulus in 1..=24u64 {
        let chars: Vec<Character> = enumerate_characters(modulus)
            .iter()
            .map(|c| c.to_group_character())
            .collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = a.inner_product(b).unwrap();
                let expected = if i == j {
                    Cyclotomic::one(1)
                } else {
                    Cyclotomic::zero(1)
                };
                assert_eq!(ip, expected, "modulus {modulus}, pair ({i}, {j})");
                orthogonality_checks += 1;
            }
        }
    }

    // reciprocity over every subgroup of every abelian group of order <= 16
    let mut reciprocity_checks = 0u64;
    for (orders, group) in abelian_zoo_up_to_16() {
        let chars = product_characters(&orders, &group);
        for elements in group.all_subgroups() {
            let sub = group.subgroup(&elements).unwrap();
            let mut psis = vec![Character::trivial(Arc::clone(sub.group()))];
            psis.push(restrict(&chars[chars.len() / 2], &sub).unwrap());
            psis.push(restrict(chars.last().unwrap(), &sub).unwrap());
            for psi in &psis {
                for chi in &chars {
                    let lhs = induce(&sub, psi).unwrap().inner_product(chi).unwrap();
                    let rhs = psi.inner_product(&restrict(chi, &sub).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "type {orders:?}, subgroup {elements:?}");
                    reciprocity_checks += 1;
                }
            }
        }
    }

    // and the symmetric group on three letters
    let s3 = FiniteGroup::symmetric(3);
    let regular = Character::regular(Arc::clone(&s3));
    let trivial = Character::trivial(Arc::clone(&s3));
    // the sign character: -1 on the three transpositions
    let sign_values = (0..6)
        .map(|g| {
            let v = if s3.order_of(g) == 2 { -1 } else { 1 };
            Cyclotomic::from_integer(v)
        })
        .collect();
    let sign = Character::new(Arc::clone(&s3), sign_values).unwrap();
    for elements in s3.all_subgroups() {
        let sub = s3.subgroup(&elements).unwrap();
        for psi in [
            Character::trivial(Arc::clone(sub.group())),
            restrict(&regular, &sub).unwrap(),
            restrict(&sign, &sub).unwrap(),
        ] {
            for chi in [&trivial, &sign, &regular] {
                let lhs = induce(&sub, &psi).unwrap().inner_product(chi).unwrap();
                let rhs = psi.inner_product(&restrict(chi, &sub).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "subgroup {elements:?}");
                reciprocity_checks += 1;
            }
        }
    }
    println!(
        "ACCEPTANCE 6 (orthogonality {orthogonality_checks} pairs, reciprocity \
         {reciprocity_checks} instances): PASS"
    );
}

#[test]
fn acceptance_7_modulus_independence() {
    let mut checks = 0u64;
    for modulus in 1..=24u64 {
        let torsor = EmbeddingSet::cyclotomic_torsor(modulus).unwrap();
        for chi in enumerate_characters(modulus) {
            let conductor = chi.conductor();
            if conductor == modulus {
                continue;
            }
            let primitive = chi.primitive_part();
            let small_torsor = EmbeddingSet::cyclotomic_torsor(conductor).unwrap();
            let big_chi = chi.to_group_character();
            let small_chi = primitive.to_group_character();
            for n in 1..=6u32 {
                assert_eq!(
                    gross_order(&torsor, &big_chi, n).unwrap(),
                    gross_order(&small_torsor, &small_chi, n).unwrap(),
                    "modulus {modulus}, conductor {conductor}, n = {n}"
                );
                checks += 1;
            }
        }
    }
    assert!(checks > 0);
    println!("ACCEPTANCE 7 (modulus independence, {checks} comparisons): PASS");
}

fn group_zoo_up_to_12() -> Vec<Arc<FiniteGroup>> {
    vec![
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(6),
        FiniteGroup::cyclic(12),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)),
        FiniteGroup::symmetric(3),
        unit_group(8),
        unit_group(12),
    ]
}

#[test]
fn acceptance_8_euler_factor_degrees_and_coset_independence() {
    let zoo = group_zoo_up_to_12();
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    let mut cases = 0;
    while cases < 20 {
        let group = &zoo[rng.gen_range(0..zoo.len())];
        let rep = if rng.gen_bool(0.5) {
            MatrixRep::regular(group)
        } else {
            // conjugate by a unit upper-triangular integer matrix so the
            // invariant structure is not visible by inspection
            let n = group.size();
            let mut q = CycloMatrix::identity(n);
            for r in 0..n {
                for c in r + 1..n {
                    *q.at_mut(r, c) = Cyclotomic::from_integer(rng.gen_range(-2i64..=2));
                }
            }
            MatrixRep::regular(group).conjugated(&q).unwrap()
        };
        let subgroups = group.all_subgroups();
        let inertia = subgroups[rng.gen_range(0..subgroups.len())].clone();
        let sub = group.subgroup(&inertia).unwrap();
        // a frobenius candidate must normalize the inertia subgroup
        let normalizers: Vec<usize> = (0..group.size())
            .filter(|&f| {
                sub.elements()
                    .iter()
                    .all(|&h| sub.contains(group.mul(group.mul(f, h), group.inv(f))))
            })
            .collect();
        let frob = normalizers[rng.gen_range(0..normalizers.len())];
        let factor = rep.euler_factor(&inertia, frob).unwrap();

        // independent fixed-space dimension: kernel of the stacked maps
        // rho(h) - I over all h in the inertia subgroup
        let d = rep.dim();
        let mut stacked = CycloMatrix::zeros(d * sub.order(), d);
        for (bi, &h) in sub.elements().iter().enumerate() {
            let diff = rep
                .image(h)
                .sub(&CycloMatrix::identity(d))
                .unwrap();
            for r in 0..d {
                for c in 0..d {
                    *stacked.at_mut(bi * d + r, c) = diff.at(r, c).clone();
                }
            }
        }
        let fixed_dim = stacked.kernel_basis().cols();
        assert_eq!(
            factor.degree().unwrap_or(0),
            fixed_dim,
            "degree equals dim of the inertia-fixed space"
        );

        for &h in sub.elements() {
            let alt = rep.euler_factor(&inertia, group.mul(frob, h)).unwrap();
            assert_eq!(alt, factor, "coset representative independence");
        }
        cases += 1;
    }
    println!("ACCEPTANCE 8 (euler factors, {cases} randomized cases): PASS");
}

#[test]
fn acceptance_9_smoke_numerics() {
    // non-exact diagnostics only: partial sums of the defining series
    let zeta = artinl::dirichlet::DirichletCharacter::trivial(1);
    let value = zeta.partial_series(2.0, 10_000);
    assert!(
        (value.re - 1.6449).abs() < 1e-3,
        "partial sum {} vs 1.6449",
        value.re
    );
    println!("ACCEPTANCE 9 (smoke numerics, 1e-3 window): PASS");
}
