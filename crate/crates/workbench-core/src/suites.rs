//! The verification batteries behind `workbench suite <name>`.
//!
//! Each suite re-derives its claims from scratch (group closure, modular
//! character tables, exact algebra) and compares against the reference
//! values, which are kept in [`reference`] as independent cross-checks.
//! A failing check is a genuine discrepancy, reported rather than patched.

use thiserror::Error;

use crate::algebra::{
    block_dimension, central_idempotent, complex_structure_check, dirac_relation_table,
    fermionic_projector, lepton_idempotents, lepton_m2_isomorphism, mass_projector_formula,
    normal_subgroup_algebras, quotient_algebra_chain, spinor_projector_formula, AlgebraElement,
    AlgebraError, PairKind,
};
use crate::chartab::{
    self, complex_wedderburn, fs_indicator, inner_product, real_wedderburn, CharError,
    WedderburnType,
};
use crate::exact::{rat, rat_int, Cyclotomic, ExactMatrix};
use crate::expr::{self, EvalContext, ExprError};
use crate::group::{GroupError, DEFAULT_CLOSURE_CAP};
use crate::octa;
use crate::report::{Check, Report};
use crate::reps::{
    self, build_4_0_from_2pm, build_irrep, charge_assignment, complex_structure_operator,
    hypercube_generators, left_multiplication_matrix, lines_match, matrix_group_closure,
    realize_quaternionic, reflection_eigenframe, spinor_spacetime_realization, Quat, RepError,
};

pub mod reference;

/// Golden value of the solved complex-structure scalar.
pub const COMPLEX_STRUCTURE_GOLDEN: &str = include_str!("../golden/complex_structure_scalar.txt");

#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("unknown suite `{0}`; valid: group, chartab, branching, tensors, idempotents, dirac, hypercube, all")]
    UnknownSuite(String),
}

/// The shared computation context: groups, aligned tables, embeddings.
pub struct Workbench {
    pub ctx: EvalContext,
    pub prime: u64,
    pub closure_cap: usize,
}

pub const SUITE_NAMES: [&str; 8] = [
    "group",
    "chartab",
    "branching",
    "tensors",
    "idempotents",
    "dirac",
    "hypercube",
    "all",
];

impl Workbench {
    pub fn new(prime: u64, closure_cap: usize) -> Result<Workbench, WorkbenchError> {
        Ok(Workbench {
            ctx: EvalContext::new(prime)?,
            prime,
            closure_cap,
        })
    }

    pub fn with_defaults() -> Result<Workbench, WorkbenchError> {
        Workbench::new(chartab::DEFAULT_PRIME, DEFAULT_CLOSURE_CAP)
    }

    pub fn run_suite(&self, name: &str) -> Result<Report, WorkbenchError> {
        match name {
            "group" => suite_group(self),
            "chartab" => suite_chartab(self),
            "branching" => suite_branching(self),
            "tensors" => suite_tensors(self),
            "idempotents" => suite_idempotents(self),
            "dirac" => suite_dirac(self),
            "hypercube" => suite_hypercube(self),
            "all" => {
                let mut all = Report::new("all verification suites");
                for n in SUITE_NAMES.iter().take(7) {
                    all.extend(self.run_suite(n)?);
                }
                Ok(all)
            }
            other => Err(WorkbenchError::UnknownSuite(other.to_string())),
        }
    }
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Group construction, class data, defining relations, quotient chain.
pub fn suite_group(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("group construction and quotients");
    let g = &wb.ctx.g;
    let h = &wb.ctx.h;

    r.push(Check::compare(
        "group/g_order",
        "order of <i,w,d>",
        g.group.order(),
        48,
    ));
    r.push(Check::compare(
        "group/h_order",
        "order of <j,d>",
        h.group.order(),
        16,
    ));
    r.push(Check::compare(
        "group/g_class_count",
        "conjugacy classes of the order-48 group",
        g.group.classes().len(),
        8,
    ));

    let g_order_idx = octa::g_column_order(g);
    let sizes: Vec<usize> = g_order_idx
        .iter()
        .map(|&i| g.group.classes()[i].size)
        .collect();
    let orders: Vec<u32> = g_order_idx
        .iter()
        .map(|&i| g.group.classes()[i].element_order)
        .collect();
    r.push(Check::compare(
        "group/g_class_sizes",
        "class sizes in column order 1,-1,i,w,-w,d,jd,-jd",
        fmt_vec(&sizes),
        fmt_vec(&[1, 1, 6, 8, 8, 12, 6, 6]),
    ));
    r.push(Check::compare(
        "group/g_class_orders",
        "element orders per class",
        fmt_vec(&orders),
        fmt_vec(&[1, 2, 4, 3, 6, 2, 8, 8]),
    ));

    let h_order_idx = octa::h_column_order(h);
    let sizes: Vec<usize> = h_order_idx
        .iter()
        .map(|&i| h.group.classes()[i].size)
        .collect();
    let orders: Vec<u32> = h_order_idx
        .iter()
        .map(|&i| h.group.classes()[i].element_order)
        .collect();
    r.push(Check::compare(
        "group/h_class_sizes",
        "class sizes in column order 1,-1,i,j,d,jd,-jd",
        fmt_vec(&sizes),
        fmt_vec(&[1, 1, 2, 4, 4, 2, 2]),
    ));
    r.push(Check::compare(
        "group/h_class_orders",
        "element orders per class",
        fmt_vec(&orders),
        fmt_vec(&[1, 2, 4, 4, 2, 8, 8]),
    ));

    for check in octa::check_relations(g, octa::G_RELATIONS)? {
        r.push(Check::bool(
            &format!("group/g_relation/{}", check.relation),
            &format!("defining relation {}", check.relation),
            check.pass,
        ));
    }
    for check in octa::check_relations(h, octa::H_RELATIONS)? {
        r.push(Check::bool(
            &format!("group/h_relation/{}", check.relation),
            &format!("semidihedral presentation {}", check.relation),
            check.pass,
        ));
    }

    // Quotient chain with kernels 1 < Z2 < Q8 < 2.Alt(4) < G.
    let chain = octa::normal_chain(g);
    let kernel_sizes: Vec<usize> = chain.iter().map(|(_, ids)| ids.len()).collect();
    r.push(Check::compare(
        "group/kernel_orders",
        "normal chain orders",
        fmt_vec(&kernel_sizes),
        fmt_vec(&[1, 2, 8, 24, 48]),
    ));
    let mut nested = true;
    for pair in chain.windows(2) {
        let small: std::collections::BTreeSet<u32> = pair[0].1.iter().copied().collect();
        let big: std::collections::BTreeSet<u32> = pair[1].1.iter().copied().collect();
        nested &= small.is_subset(&big);
    }
    let all_normal = chain.iter().all(|(_, ids)| g.group.is_normal(ids));
    r.push(Check::bool(
        "group/chain_nested",
        "chain is ascending",
        nested,
    ));
    r.push(Check::bool(
        "group/chain_normal",
        "every kernel is normal",
        all_normal,
    ));

    let mut quotient_orders = Vec::new();
    let mut homs_ok = true;
    for (_, kernel) in &chain {
        let (q, map) = g.group.quotient(kernel)?;
        quotient_orders.push(q.order());
        for a in 0..g.group.order() as u32 {
            for b in 0..g.group.order() as u32 {
                homs_ok &= map.image_of[g.group.mul(a, b) as usize]
                    == q.mul(map.image_of[a as usize], map.image_of[b as usize]);
            }
        }
    }
    r.push(Check::compare(
        "group/quotient_orders",
        "quotient orders along the chain",
        fmt_vec(&quotient_orders),
        fmt_vec(&[48, 24, 6, 2, 1]),
    ));
    r.push(Check::bool(
        "group/quotient_homomorphisms",
        "every projection is a homomorphism (exhaustive)",
        homs_ok,
    ));

    // In the order-24 quotient the images x,y,z of i,j,k are involutions
    // with product 1.
    let (q24, map) = g.group.quotient(&chain[1].1)?;
    let x = map.image_of[g.id("i") as usize];
    let y = map.image_of[g.id("j") as usize];
    let z = map.image_of[g.id("k") as usize];
    r.push(Check::bool(
        "group/quotient_xyz",
        "x² = y² = z² = 1 and xyz = 1 in the order-24 quotient",
        q24.mul(x, x) == 0
            && q24.mul(y, y) == 0
            && q24.mul(z, z) == 0
            && q24.mul(q24.mul(x, y), z) == 0,
    ));
    Ok(r)
}

/// Character tables against the reference entries, orthogonality,
/// Wedderburn structure, algebra chains.
pub fn suite_chartab(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("character tables and algebra structure");
    let ctx = &wb.ctx;

    let g_cols = octa::g_column_order(&ctx.g);
    for (label, expected_row) in reference::g_character_table() {
        let chi = ctx.tg.by_label(label).expect("aligned labels");
        let got: Vec<String> = g_cols
            .iter()
            .map(|&c| chi.values[c].to_pretty_string())
            .collect();
        let want: Vec<String> = expected_row
            .iter()
            .map(|s| {
                Cyclotomic::parse_pretty(s)
                    .expect("reference entry")
                    .to_pretty_string()
            })
            .collect();
        r.push(Check::compare(
            &format!("chartab/g_row/{label}"),
            &format!("computed row {label} matches the reference entries"),
            fmt_vec(&got),
            fmt_vec(&want),
        ));
    }
    let h_cols = octa::h_column_order(&ctx.h);
    for (label, expected_row) in reference::h_character_table() {
        let chi = ctx.th.by_label(label).expect("aligned labels");
        let got: Vec<String> = h_cols
            .iter()
            .map(|&c| chi.values[c].to_pretty_string())
            .collect();
        let want: Vec<String> = expected_row
            .iter()
            .map(|s| {
                Cyclotomic::parse_pretty(s)
                    .expect("reference entry")
                    .to_pretty_string()
            })
            .collect();
        r.push(Check::compare(
            &format!("chartab/h_row/{label}"),
            &format!("computed row {label} matches the reference entries"),
            fmt_vec(&got),
            fmt_vec(&want),
        ));
    }

    for (name, gc, table) in [
        ("g", &ctx.g, &ctx.tg),
        ("h", &ctx.h, &ctx.th),
        ("k", &ctx.k, &ctx.tk),
    ] {
        let grp = &gc.group;
        let mut deg_sum = rat_int(0);
        let mut rows_ok = true;
        for (i, a) in table.chars.iter().enumerate() {
            let d = a.degree(grp);
            deg_sum += &d * &d;
            for (j, b) in table.chars.iter().enumerate() {
                let ip = inner_product(grp, a, b);
                let expected = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                rows_ok &= ip == expected;
            }
        }
        r.push(Check::compare(
            &format!("chartab/{name}_degree_sum"),
            "sum of squared degrees equals the group order",
            deg_sum.to_string(),
            grp.order().to_string(),
        ));
        r.push(Check::bool(
            &format!("chartab/{name}_row_orthogonality"),
            "rows are orthonormal",
            rows_ok,
        ));
        let m = grp.classes().len();
        let mut cols_ok = true;
        for x in 0..m {
            for y in 0..m {
                let mut acc = Cyclotomic::zero();
                for chi in &table.chars {
                    acc = &acc + &chi.values[x].mul(&chi.values[y].conj());
                }
                let expected = if x == y {
                    Cyclotomic::from_int((grp.order() / grp.classes()[x].size) as i64)
                } else {
                    Cyclotomic::zero()
                };
                cols_ok &= acc == expected;
            }
        }
        r.push(Check::bool(
            &format!("chartab/{name}_column_orthogonality"),
            "columns satisfy the centralizer relation",
            cols_ok,
        ));
    }

    r.push(Check::compare(
        "chartab/g_real_wedderburn",
        "real group algebra block structure",
        real_wedderburn(&ctx.g.group, &ctx.tg)?,
        WedderburnType::parse(reference::G_REAL_ALGEBRA).unwrap(),
    ));
    r.push(Check::compare(
        "chartab/g_complex_wedderburn",
        "complex group algebra block structure",
        complex_wedderburn(&ctx.g.group, &ctx.tg),
        WedderburnType::parse(reference::G_COMPLEX_ALGEBRA).unwrap(),
    ));

    for ((label, wt), (want_label, want)) in quotient_algebra_chain(&ctx.g, wb.prime)?
        .into_iter()
        .zip(reference::QUOTIENT_ALGEBRA_CHAIN)
    {
        debug_assert_eq!(label, want_label);
        r.push(Check::compare(
            &format!("chartab/quotient_algebra/{label}"),
            &format!("real group algebra of the quotient {label}"),
            wt,
            WedderburnType::parse(want).unwrap(),
        ));
    }
    for ((label, wt), (want_label, want)) in normal_subgroup_algebras(wb.prime)?
        .into_iter()
        .zip(reference::NORMAL_SUBGROUP_ALGEBRAS)
    {
        debug_assert_eq!(label, want_label);
        r.push(Check::compare(
            &format!("chartab/subgroup_algebra/{label}"),
            &format!("real group algebra of the normal subgroup {label}"),
            wt,
            WedderburnType::parse(want).unwrap(),
        ));
    }

    // Frobenius–Schur indicators behind the real forms.
    let indicators: Vec<String> = ctx
        .tg
        .chars
        .iter()
        .map(|chi| {
            Ok::<_, WorkbenchError>(format!(
                "{}:{}",
                chi.label,
                fs_indicator(&ctx.g.group, chi)?
            ))
        })
        .collect::<Result<_, _>>()?;
    r.push(Check::compare(
        "chartab/g_indicators",
        "Frobenius–Schur indicators per irreducible",
        indicators.join(" "),
        "1+:1 1-:1 2_0:1 3+:1 3-:1 2+:0 2-:0 4_0:1",
    ));

    // Exact-arithmetic axioms on a fixed pseudo-random sample.
    r.push(Check::bool(
        "chartab/field_axioms_seeded",
        "field axioms hold on the seeded sample",
        field_axioms_hold(0x5eed_0001, 10),
    ));
    Ok(r)
}

/// Field axioms on a deterministic sample; shared with the acceptance suite.
pub fn field_axioms_hold(seed: u64, count: usize) -> bool {
    let mut state = seed;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let vals: Vec<Cyclotomic> = (0..count)
        .map(|_| {
            let raw: Vec<_> = (0..8)
                .map(|_| rat((next() % 9) as i64 - 4, (next() % 4) as i64 + 1))
                .collect();
            Cyclotomic::normalize(&raw)
        })
        .collect();
    for a in &vals {
        for b in &vals {
            if a.mul(b) != b.mul(a) {
                return false;
            }
            if a.mul(b).conj() != a.conj().mul(&b.conj()) {
                return false;
            }
            for c in &vals {
                if a.mul(&b.mul(c)) != a.mul(b).mul(c) {
                    return false;
                }
                if a.mul(&(b + c)) != &a.mul(b) + &a.mul(c) {
                    return false;
                }
            }
        }
        if !a.is_zero() && !a.mul(&a.inv().expect("nonzero")).is_one() {
            return false;
        }
        if a.conj().conj() != *a {
            return false;
        }
    }
    true
}

/// The full restriction table and Frobenius reciprocity.
pub fn suite_branching(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("branching to the order-16 subgroup");
    let ctx = &wb.ctx;
    for (g_label, expected) in reference::BRANCHING {
        let chi = ctx.tg.by_label(g_label).expect("aligned labels");
        let res = chartab::restrict(&ctx.g.group, chi, &ctx.h.group, &ctx.h_embedding);
        let d = chartab::decompose(&ctx.h.group, &ctx.th, &res)?;
        r.push(Check::compare(
            &format!("branching/res/{g_label}"),
            &format!("restriction of {g_label}"),
            d.to_string(),
            expected.to_string(),
        ));
    }
    let mut reciprocity = true;
    for a in &ctx.th.chars {
        let ind = chartab::induce(&ctx.h.group, a, &ctx.g.group, &ctx.h_embedding);
        for b in &ctx.tg.chars {
            let res = chartab::restrict(&ctx.g.group, b, &ctx.h.group, &ctx.h_embedding);
            reciprocity &=
                inner_product(&ctx.g.group, &ind, b) == inner_product(&ctx.h.group, a, &res);
        }
    }
    r.push(Check::bool(
        "branching/frobenius_reciprocity",
        "⟨Ind a, b⟩ = ⟨a, Res b⟩ on the full 7x8 grid",
        reciprocity,
    ));
    Ok(r)
}

/// The tensor catalogue: every reference decomposition identity.
pub fn suite_tensors(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("tensor catalogue");
    let ctx = &wb.ctx;
    for (lhs, rhs) in reference::TENSOR_CATALOGUE {
        let (ambient_l, dl) = expr::eval_str(ctx, lhs)?;
        let (ambient_r, dr) = expr::eval_str(ctx, rhs)?;
        let pass = ambient_l == ambient_r && dl == dr;
        r.push(Check {
            id: format!("tensors/{lhs}"),
            claim: format!("{lhs} decomposes as {rhs}"),
            computed: format!("{dl}"),
            expected: format!("{dr}"),
            pass,
        });
    }

    // The square of 3± + 4_0 is one copy of the group algebra plus 1+.
    for sign in ["3+", "3-"] {
        let (_, total) = expr::eval_str(ctx, &format!("L2({sign} + 4_0) + S2({sign} + 4_0)"))?;
        let mut want: Vec<(String, u32)> = ctx
            .tg
            .chars
            .iter()
            .map(|chi| {
                let d = chi.degree(&ctx.g.group);
                (
                    chi.label.clone(),
                    d.to_integer().to_string().parse::<u32>().unwrap(),
                )
            })
            .collect();
        want[0].1 += 1; // one extra copy of the trivial representation
        r.push(Check::compare(
            &format!("tensors/square_of_{sign}+4_0"),
            "tensor square equals the group algebra plus the trivial rep",
            total.to_string(),
            chartab::Decomposition { entries: want }.to_string(),
        ));
    }

    // Generic dimension split of a 3-dimensional cube: 27 = 1 + 2·8 + 10.
    let three = ctx.tg.by_label("3+").unwrap();
    let id_class = ctx.g.group.class_of(0);
    let l3 = chartab::alt3(&ctx.g.group, three).values[id_class].clone();
    let m3 = chartab::mid3(&ctx.g.group, three).values[id_class].clone();
    let s3 = chartab::sym3(&ctx.g.group, three).values[id_class].clone();
    r.push(Check::compare(
        "tensors/generic_cube_degrees",
        "cube of a 3-dimensional rep splits as 1 + 8 + 8 + 10",
        format!(
            "{} + {} + {} + {}",
            l3.to_pretty_string(),
            m3.to_pretty_string(),
            m3.to_pretty_string(),
            s3.to_pretty_string()
        ),
        "1 + 8 + 8 + 10",
    ));

    // Functor consistency classwise on every irreducible.
    let mut consistent = true;
    for chi in &ctx.tg.chars {
        let grp = &ctx.g.group;
        let square = chartab::tensor(chi, chi);
        let split = chartab::add_characters(&chartab::sym2(grp, chi), &chartab::alt2(grp, chi));
        consistent &= square.values == split.values;
        let cube = chartab::tensor(&square, chi);
        let m = chartab::mid3(grp, chi);
        let split3 = chartab::add_characters(
            &chartab::add_characters(&chartab::sym3(grp, chi), &chartab::alt3(grp, chi)),
            &chartab::add_characters(&m, &m),
        );
        consistent &= cube.values == split3.values;
    }
    r.push(Check::bool(
        "tensors/functor_consistency",
        "tensor square = S² + Λ² and cube = S³ + Λ³ + 2M³, classwise",
        consistent,
    ));
    Ok(r)
}

/// Idempotents, the 2x2 realisation, block projectors, complex structure.
pub fn suite_idempotents(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("idempotents and projectors");
    let ctx = &wb.ctx;
    let k = &ctx.k;
    let grp = &k.group;
    let idem = lepton_idempotents(k);

    for (name, e) in [("p", &idem.p), ("q", &idem.q), ("r", &idem.r)] {
        r.push(Check::bool(
            &format!("idempotents/{name}_squared"),
            &format!("{name}² = {name}"),
            &e.convolve(grp, e) == e,
        ));
    }
    let mut orthogonal = true;
    for (a, b) in [
        (&idem.p, &idem.q),
        (&idem.q, &idem.p),
        (&idem.p, &idem.r),
        (&idem.r, &idem.p),
        (&idem.q, &idem.r),
        (&idem.r, &idem.q),
    ] {
        orthogonal &= a.convolve(grp, b).is_zero();
    }
    r.push(Check::bool(
        "idempotents/pairwise_orthogonal",
        "pq = qp = pr = rp = qr = rq = 0",
        orthogonal,
    ));
    r.push(Check::bool(
        "idempotents/sum_is_one",
        "p + q + r = 1",
        idem.p.add(&idem.q).add(&idem.r) == AlgebraElement::basis(0),
    ));
    let w = AlgebraElement::basis(k.id("w"));
    let d = AlgebraElement::basis(k.id("d"));
    r.push(Check::bool(
        "idempotents/actions",
        "pw = pd = p, qw = q, qd = -q",
        idem.p.convolve(grp, &w) == idem.p
            && idem.p.convolve(grp, &d) == idem.p
            && idem.q.convolve(grp, &w) == idem.q
            && idem.q.convolve(grp, &d) == idem.q.neg(),
    ));
    r.push(Check::bool(
        "idempotents/m2_isomorphism",
        "the 2x2 realisation is multiplicative on all 16 basis pairs and spans",
        lepton_m2_isomorphism(k).is_ok(),
    ));

    // Central idempotents of the order-48 group.
    let g = &ctx.g;
    let ggrp = &g.group;
    let idems: Vec<AlgebraElement> = ctx
        .tg
        .chars
        .iter()
        .map(|chi| central_idempotent(ggrp, chi))
        .collect();
    let mut properties = true;
    let mut total = AlgebraElement::zero();
    for (i, e) in idems.iter().enumerate() {
        properties &= &e.convolve(ggrp, e) == e && e.is_central(ggrp);
        for (j, f) in idems.iter().enumerate() {
            if i != j {
                properties &= e.convolve(ggrp, f).is_zero();
            }
        }
        total = total.add(e);
    }
    properties &= total == AlgebraElement::basis(0);
    r.push(Check::bool(
        "idempotents/central_family",
        "central idempotents are orthogonal, central, and sum to 1",
        properties,
    ));
    let dims: Vec<String> = ctx
        .tg
        .chars
        .iter()
        .zip(&idems)
        .map(|(chi, e)| format!("{}:{}", chi.label, block_dimension(ggrp, e)))
        .collect();
    r.push(Check::compare(
        "idempotents/block_dimensions",
        "block dimension equals squared degree for every irreducible",
        dims.join(" "),
        "1+:1 1-:1 2_0:4 3+:9 3-:9 2+:4 2-:4 4_0:16",
    ));

    let f = fermionic_projector(g);
    let e2p = central_idempotent(ggrp, ctx.tg.by_label("2+").unwrap());
    let e2m = central_idempotent(ggrp, ctx.tg.by_label("2-").unwrap());
    let e4 = central_idempotent(ggrp, ctx.tg.by_label("4_0").unwrap());
    r.push(Check::bool(
        "idempotents/fermionic_projector",
        "(1-(-1))/2 equals the sum of the three faithful central idempotents",
        f == e2p.add(&e2m).add(&e4),
    ));
    r.push(Check::bool(
        "idempotents/mass_projector",
        "the displayed spacetime-block projector equals e(4_0) exactly",
        mass_projector_formula(g) == e4,
    ));
    let spinor_formula = spinor_projector_formula(g);
    let spinor_block = e2p.add(&e2m);
    r.push(Check {
        id: "idempotents/spinor_projector".into(),
        claim: "the displayed spinor-block projector equals e(2+) + e(2-) exactly".into(),
        computed: if spinor_formula == spinor_block.scale_rational(&rat_int(2)) {
            "displayed formula = 2·(e(2+) + e(2-)); it is not idempotent, \
             the halved formula matches exactly"
                .into()
        } else {
            "displayed formula does not match the block idempotent".into()
        },
        expected: "displayed formula = e(2+) + e(2-)".into(),
        pass: spinor_formula == spinor_block,
    });

    // Complex structure: displayed scalar or solved scalar.
    let report = complex_structure_check(g, &ctx.tg, 1)?;
    r.push(Check::bool(
        "idempotents/iota_in_block",
        "ι·e = ι for e = e(2+) + e(2-)",
        report.lies_in_block,
    ));
    r.push(Check::bool(
        "idempotents/iota_commutes",
        "ι commutes with e·g·e for every group element",
        report.commutes_with_corner,
    ));
    let golden = parse_golden();
    let solved_matches_golden = report
        .solved_scalar
        .as_ref()
        .map(|s| s.to_pretty_string() == golden.0 && s.to_canonical_string() == golden.1)
        .unwrap_or(false);
    r.push(Check {
        id: "idempotents/iota_square".into(),
        claim: "ι² = -e with the displayed scalar, or the solved scalar matches the golden value"
            .into(),
        computed: match (&report.displayed_scalar_squares, &report.solved_scalar) {
            (true, _) => "displayed scalar 1/(6·sqrt2) squares ι to -e".into(),
            (false, Some(s)) => format!(
                "displayed scalar gives ι² = -e/4; solved scalar {}",
                s.to_pretty_string()
            ),
            (false, None) => "no scalar in the field squares ι to -e".into(),
        },
        expected: format!("displayed scalar works, or solved scalar = {}", golden.0),
        pass: report.displayed_scalar_squares || solved_matches_golden,
    });
    let minus = complex_structure_check(g, &ctx.tg, -1)?;
    r.push(Check::bool(
        "idempotents/iota_signs",
        "the two sign choices are negatives of each other",
        minus.iota0 == report.iota0.neg(),
    ));

    // Convolution associativity on a deterministic sample.
    r.push(Check::bool(
        "idempotents/convolution_associativity",
        "convolution is associative on the seeded sample",
        convolution_associative(ggrp, 0x5eed_0002, 5),
    ));
    Ok(r)
}

/// Convolution associativity on seeded sparse elements; shared with the
/// acceptance suite.
pub fn convolution_associative(g: &crate::group::FiniteGroup, seed: u64, rounds: usize) -> bool {
    let mut state = seed;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..rounds {
        let rand_elt = |next: &mut dyn FnMut() -> u64| {
            AlgebraElement::from_terms((0..g.order() as u32).filter_map(|id| {
                if next().is_multiple_of(5) {
                    Some((id, Cyclotomic::from_int((next() % 7) as i64 - 3)))
                } else {
                    None
                }
            }))
        };
        let a = rand_elt(&mut next);
        let b = rand_elt(&mut next);
        let c = rand_elt(&mut next);
        if a.convolve(g, &b).convolve(g, &c) != a.convolve(g, &b.convolve(g, &c)) {
            return false;
        }
    }
    true
}

fn parse_golden() -> (String, String) {
    let mut pretty = String::new();
    let mut canonical = String::new();
    for line in COMPLEX_STRUCTURE_GOLDEN.lines() {
        if let Some(rest) = line.strip_prefix("pretty: ") {
            pretty = rest.trim().to_string();
        }
        if let Some(rest) = line.strip_prefix("canonical: ") {
            canonical = rest.trim().to_string();
        }
    }
    (pretty, canonical)
}

/// The gamma-relation comparison.
pub fn suite_dirac(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("gamma-relation comparison");
    let table = dirac_relation_table(&wb.ctx.h)?;
    let squares: Vec<String> = table
        .squares
        .iter()
        .map(|(n, s)| format!("{n}²={s:+}"))
        .collect();
    r.push(Check::compare(
        "dirac/squares",
        "squares of (i, j, k, d, id)",
        squares.join(" "),
        "i²=-1 j²=-1 k²=-1 d²=+1 id²=+1",
    ));
    let twisted: Vec<String> = table
        .twisted_pairs()
        .iter()
        .map(|(a, b)| format!("{{{a},{b}}}"))
        .collect();
    r.push(Check::compare(
        "dirac/twisted_pairs",
        "exactly four twisted unordered pairs",
        twisted.join(" "),
        "{j,d} {j,id} {k,d} {k,id}",
    ));
    let witnesses: Vec<String> = table
        .pairs
        .iter()
        .filter_map(|p| match &p.kind {
            PairKind::Twisted { sign, partner } => Some(format!(
                "{}·{} = {}{}·{}",
                p.x,
                p.y,
                if *sign < 0 { "-" } else { "" },
                p.y,
                partner
            )),
            _ => None,
        })
        .collect();
    r.push(Check::compare(
        "dirac/twisted_witnesses",
        "verified twisted identities (ordered pairs)",
        witnesses.join(", "),
        "j·d = -d·k, j·id = id·k, k·d = -d·j, k·id = id·j, \
         d·j = j·id, d·k = -k·id, id·j = j·d, id·k = -k·d",
    ));
    let agreements = table.pairs.iter().filter(|p| p.gamma_agrees).count();
    r.push(Check::compare(
        "dirac/gamma_agreement",
        "anticommutation matches the gamma schema on the other six pairs",
        agreements / 2,
        6,
    ));
    let mut symmetric = true;
    for p in &table.pairs {
        let q = table
            .pairs
            .iter()
            .find(|q| q.x == p.y && q.y == p.x)
            .expect("exhaustive table");
        let class = |k: &PairKind| match k {
            PairKind::Commute => 0,
            PairKind::Anticommute => 1,
            PairKind::Twisted { .. } => 2,
        };
        symmetric &= class(&p.kind) == class(&q.kind);
    }
    r.push(Check::bool(
        "dirac/symmetric_consistency",
        "the (x,y) entry determines the (y,x) entry",
        symmetric,
    ));
    Ok(r)
}

/// Hypercube closures, unitarity, determinants, eigenframes, charges.
pub fn suite_hypercube(wb: &Workbench) -> Result<Report, WorkbenchError> {
    let mut r = Report::new("hypercube quantisation");
    let g = &wb.ctx.g;
    let cap = wb.closure_cap;

    let qa = realize_quaternionic(g, "4_0")?;
    let (w_mat, jd_mat) = hypercube_generators();
    r.push(Check::bool(
        "hypercube/spinor_images",
        "the realized 4-space images of w and jd are the quantised generators",
        qa.rep.images[g.id("w") as usize] == w_mat && qa.rep.images[g.id("jd") as usize] == jd_mat,
    ));

    let (order, signed) = matrix_group_closure(&[w_mat.clone(), jd_mat.clone()], cap)?;
    r.push(Check::compare(
        "hypercube/closure_48",
        "closure of <w, jd>",
        order,
        48,
    ));
    r.push(Check::bool(
        "hypercube/closure_48_signed",
        "all elements are signed permutation matrices",
        signed,
    ));

    let li = left_multiplication_matrix(&Quat::i());
    let lj = left_multiplication_matrix(&Quat::j());
    let lk = left_multiplication_matrix(&Quat::k());
    let (order, signed) = matrix_group_closure(
        &[
            w_mat.clone(),
            jd_mat.clone(),
            li.clone(),
            lj.clone(),
            lk.clone(),
        ],
        cap,
    )?;
    r.push(Check::compare(
        "hypercube/closure_192",
        "adding the other-side multiplications by i, j, k",
        order,
        192,
    ));
    r.push(Check::bool(
        "hypercube/closure_192_signed",
        "still signed permutations",
        signed,
    ));

    let reflection = ExactMatrix::parse_rows(&[
        &["0", "1", "0", "0"],
        &["1", "0", "0", "0"],
        &["0", "0", "1", "0"],
        &["0", "0", "0", "1"],
    ])
    .unwrap();
    let (order, signed) = matrix_group_closure(&[w_mat, jd_mat, li, lj, lk, reflection], cap)?;
    r.push(Check::compare(
        "hypercube/closure_384",
        "adding one determinant -1 signed permutation",
        order,
        384,
    ));
    r.push(Check::bool(
        "hypercube/closure_384_signed",
        "still signed permutations",
        signed,
    ));

    for label in ["2_0", "2+", "2-"] {
        let rep = build_irrep(g, label)?;
        r.push(Check::bool(
            &format!("hypercube/unitary_{label}"),
            &format!("all 48 images of {label} satisfy MᴴM = I"),
            rep.is_unitary(),
        ));
    }

    let three_minus = build_irrep(g, "3-")?;
    let one = Cyclotomic::one().to_canonical_string();
    let minus_one = Cyclotomic::from_int(-1).to_canonical_string();
    r.push(Check::bool(
        "hypercube/det_3-",
        "every 3- image has determinant 1",
        three_minus.determinant_values() == std::collections::BTreeSet::from([one]),
    ));
    let three_plus = build_irrep(g, "3+")?;
    r.push(Check::bool(
        "hypercube/det_3+",
        "some 3+ image has determinant -1",
        three_plus.determinant_values().contains(&minus_one),
    ));

    // Constructed real spinor has the right character for both scalar signs.
    let reference4 = wb.ctx.tg.by_label("4_0").unwrap();
    let both = [true, false].iter().all(|&plus| {
        build_4_0_from_2pm(g, plus)
            .and_then(|rep| rep.character(&g.group))
            .map(|chi| chi.values == reference4.values)
            .unwrap_or(false)
    });
    r.push(Check::bool(
        "hypercube/spinor_from_twist",
        "the scalar-twist-plus-conjugation construction has the 4_0 character for both signs",
        both,
    ));

    // Invariant complex structure on the w-right realisation.
    let variant = spinor_spacetime_realization(g)?;
    let j_op = complex_structure_operator(1);
    let minus_id = ExactMatrix::identity(4).neg();
    let invariant = j_op.mul(&j_op) == minus_id
        && variant
            .rep
            .images
            .iter()
            .all(|m| j_op.mul(m) == m.mul(&j_op))
        && complex_structure_operator(-1) == j_op.neg();
    r.push(Check::bool(
        "hypercube/complex_structure",
        "multiplication by ±(j-k)/sqrt2 squares to -1 and commutes with every image",
        invariant,
    ));

    // Reflection eigenframes of 2_0.
    let rep20 = build_irrep(g, "2_0")?;
    let frames = reflection_eigenframe(&rep20);
    let line = |x: &str, y: &str| {
        vec![
            Cyclotomic::parse_pretty(x).unwrap(),
            Cyclotomic::parse_pretty(y).unwrap(),
        ]
    };
    let plus: Vec<Vec<Cyclotomic>> = frames.iter().map(|f| f.plus_line.clone()).collect();
    let minus: Vec<Vec<Cyclotomic>> = frames.iter().map(|f| f.minus_line.clone()).collect();
    r.push(Check::bool(
        "hypercube/eigenframe_plus",
        "the +1 eigenlines match (2,0), (-1,sqrt3), (-1,-sqrt3) projectively",
        frames.len() == 3
            && lines_match(
                &plus,
                &[line("2", "0"), line("-1", "sqrt3"), line("-1", "-1*sqrt3")],
            ),
    ));
    r.push(Check::bool(
        "hypercube/eigenframe_minus",
        "the -1 eigenlines match (0,2), (sqrt3,-1), (-sqrt3,-1) projectively",
        lines_match(
            &minus,
            &[line("0", "2"), line("sqrt3", "-1"), line("-1*sqrt3", "-1")],
        ),
    ));
    let orthogonal = frames.iter().all(|f| {
        (&f.plus_line[0].mul(&f.minus_line[0]) + &f.plus_line[1].mul(&f.minus_line[1])).is_zero()
    });
    r.push(Check::bool(
        "hypercube/eigenframe_orthogonal",
        "paired eigenlines of one reflection are orthogonal",
        orthogonal,
    ));

    let (first, second) = charge_assignment();
    r.push(Check::compare(
        "hypercube/charges_first",
        "imaginary parts of the first direction triple",
        fmt_vec(&first),
        fmt_vec(&[rat_int(0), rat_int(1), rat_int(-1)]),
    ));
    r.push(Check::compare(
        "hypercube/charges_second",
        "imaginary parts of the second direction triple",
        fmt_vec(&second),
        fmt_vec(&[rat(2, 3), rat(-1, 3), rat(-1, 3)]),
    ));

    // Quaternionic realisations carry the advertised characters.
    for (row, want) in [
        ("1+1-2_0", "1+ + 1- + 2_0"),
        ("1+3-", "1+ + 3-"),
        ("1-3+", "1- + 3+"),
        ("4_0", "4_0"),
        ("2+2-", "2+ + 2-"),
    ] {
        let qa = realize_quaternionic(g, row)?;
        let chi = qa.rep.character(&g.group)?;
        let d = chartab::decompose(&g.group, &wb.ctx.tg, &chi)?;
        r.push(Check::compare(
            &format!("hypercube/quaternionic/{row}"),
            &format!("realized action decomposes as {want}"),
            d.to_string(),
            want,
        ));
    }

    // Every built irreducible matches its computed table row.
    let mut rows_match = true;
    for label in chartab::G_LABELS {
        let rep = reps::build_irrep(g, label)?;
        rows_match &= rep.character(&g.group)?.values == wb.ctx.tg.by_label(label).unwrap().values;
    }
    r.push(Check::bool(
        "hypercube/irreps_match_table",
        "every explicitly built irreducible has its table character",
        rows_match,
    ));
    Ok(r)
}
