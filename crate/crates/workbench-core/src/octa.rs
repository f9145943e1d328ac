//! The concrete groups of the workbench: the binary octahedral group
//! `G = <i, w, d>` of order 48, its semidihedral subgroup `H = <j, d>` of
//! order 16, the order-6 subgroup `K = <w, d>`, the quaternion group,
//! the binary tetrahedral group, and the normal-subgroup chain
//! `1 < Z2 < Q8 < 2.Alt(4) < G`.
//!
//! Generators are fixed unit quaternions written as 2x2 matrices
//! `M(a,b) = [[a, b], [-conj b, conj a]]`:
//!
//! ```text
//! i = M(0,1)   j = M(0,i)   k = M(i,0)
//! w = M(-1+i, 1+i)/2        c = M(-i, i)/sqrt2        d = c/i
//! ```

use std::collections::BTreeMap;

use crate::exact::{Cyclotomic, ExactMatrix};
use crate::group::{FiniteGroup, GroupError, DEFAULT_CLOSURE_CAP};

/// A generated group together with its conventionally named elements.
#[derive(Debug, Clone)]
pub struct GroupContext {
    pub label: String,
    pub group: FiniteGroup,
    /// Conventional names: `1`, `-1`, `i`, `j`, `k`, `w`, `d`, `c`, `jd`,
    /// `id` — whichever exist in the group.
    pub names: BTreeMap<String, u32>,
}

impl GroupContext {
    /// Id of a named element; panics on unknown names (they are fixed here).
    pub fn id(&self, name: &str) -> u32 {
        *self
            .names
            .get(name)
            .unwrap_or_else(|| panic!("no element named `{name}` in {}", self.label))
    }

    pub fn class_index(&self, name: &str) -> usize {
        self.group.class_of(self.id(name))
    }
}

fn c(s: &str) -> Cyclotomic {
    Cyclotomic::parse_pretty(s).expect("constant scalar literal")
}

fn m2(e00: &str, e01: &str, e10: &str, e11: &str) -> ExactMatrix {
    ExactMatrix::new(2, 2, vec![c(e00), c(e01), c(e10), c(e11)])
}

/// The six quaternion constants as 2x2 matrices.
pub struct QuaternionMatrices {
    pub i: ExactMatrix,
    pub j: ExactMatrix,
    pub k: ExactMatrix,
    pub w: ExactMatrix,
    pub c: ExactMatrix,
    pub d: ExactMatrix,
}

pub fn quaternion_matrices() -> QuaternionMatrices {
    let i = m2("0", "1", "-1", "0");
    let j = m2("0", "i", "i", "0");
    let k = m2("i", "0", "0", "-i");
    let w = m2(
        "-1/2 + 1/2*i",
        "1/2 + 1/2*i",
        "-1/2 + 1/2*i",
        "-1/2 - 1/2*i",
    );
    let half_sqrt2 = Cyclotomic::sqrt2().inv().expect("sqrt2 invertible");
    let cq = m2("-i", "i", "i", "i").scale(&half_sqrt2);
    // d = c / i, a scalar division.
    let d = cq.scale(&Cyclotomic::i().inv().expect("i invertible"));
    QuaternionMatrices {
        i,
        j,
        k,
        w,
        c: cq,
        d,
    }
}

fn attach_names(group: &FiniteGroup) -> BTreeMap<String, u32> {
    let q = quaternion_matrices();
    let minus = |m: &ExactMatrix| m.neg();
    let mut names = BTreeMap::new();
    let mut put = |name: &str, mat: &ExactMatrix| {
        if let Some(id) = group.id_of_matrix(mat) {
            names.insert(name.to_string(), id);
        }
    };
    put("1", &ExactMatrix::identity(2));
    put("-1", &minus(&ExactMatrix::identity(2)));
    put("i", &q.i);
    put("j", &q.j);
    put("k", &q.k);
    put("w", &q.w);
    put("c", &q.c);
    put("d", &q.d);
    put("jd", &q.j.mul(&q.d));
    put("id", &q.i.mul(&q.d));
    put("kd", &q.k.mul(&q.d));
    put("wd", &q.w.mul(&q.d));
    names
}

/// Installs display names in the signed `q w^a d^b` normal form
/// (`q` among `1, i, j, k`), matching the conventional element listing.
fn install_quaternion_display(group: &mut FiniteGroup, names: &BTreeMap<String, u32>) {
    let mut display: Vec<Option<String>> = vec![None; group.order()];
    let one = 0u32;
    let parts_q: [(&str, Option<&str>); 4] = [
        ("", None),
        ("i", Some("i")),
        ("j", Some("j")),
        ("k", Some("k")),
    ];
    let parts_w = [("", 0u32), ("w", 1), ("w2", 2)];
    let parts_d = [("", 0u32), ("d", 1)];
    let id_of = |n: &str| names.get(n).copied();
    let (Some(z), w_id, d_id) = (id_of("-1"), id_of("w"), id_of("d")) else {
        return;
    };
    for (sign_txt, signed) in [("", false), ("-", true)] {
        for (q_txt, q_name) in parts_q {
            let Some(q_id) = (match q_name {
                None => Some(one),
                Some(n) => id_of(n),
            }) else {
                continue;
            };
            for (w_txt, w_pow) in parts_w {
                let w_part = match (w_pow, w_id) {
                    (0, _) => one,
                    (_, None) => continue,
                    (p, Some(w)) => group.power(w, p as i64),
                };
                for (d_txt, d_pow) in parts_d {
                    let d_part = match (d_pow, d_id) {
                        (0, _) => one,
                        (_, None) => continue,
                        (_, Some(d)) => d,
                    };
                    let mut x = group.mul(group.mul(q_id, w_part), d_part);
                    if signed {
                        x = group.mul(z, x);
                    }
                    let body = format!("{q_txt}{w_txt}{d_txt}");
                    let text = if body.is_empty() {
                        format!("{sign_txt}1")
                    } else {
                        format!("{sign_txt}{body}")
                    };
                    let slot = &mut display[x as usize];
                    if slot.is_none() {
                        *slot = Some(text);
                    }
                }
            }
        }
    }
    if display.iter().all(Option::is_some) {
        group.set_display_names(display.into_iter().map(Option::unwrap).collect());
    }
}

fn build(label: &str, gens: &[&ExactMatrix], names: &[&str]) -> GroupContext {
    let mats: Vec<ExactMatrix> = gens.iter().map(|m| (*m).clone()).collect();
    let group = FiniteGroup::generate(&mats, names, DEFAULT_CLOSURE_CAP)
        .expect("fixed generator sets close");
    let named = attach_names(&group);
    let mut group = group;
    install_quaternion_display(&mut group, &named);
    GroupContext {
        label: label.to_string(),
        group,
        names: named,
    }
}

/// `G = <i, w, d>`, order 48.
pub fn octahedral_group() -> GroupContext {
    let q = quaternion_matrices();
    build("G", &[&q.i, &q.w, &q.d], &["i", "w", "d"])
}

/// `H = <j, d>`, the semidihedral group of order 16.
pub fn semidihedral_group() -> GroupContext {
    let q = quaternion_matrices();
    build("H", &[&q.j, &q.d], &["j", "d"])
}

/// `K = <w, d>`, order 6, realized as a subgroup.
pub fn lepton_group() -> GroupContext {
    let q = quaternion_matrices();
    build("K", &[&q.w, &q.d], &["w", "d"])
}

/// The quaternion group `Q8 = <i, j>`.
pub fn quaternion_group() -> GroupContext {
    let q = quaternion_matrices();
    build("Q8", &[&q.i, &q.j], &["i", "j"])
}

/// The binary tetrahedral group `2.Alt(4) = <i, w>`, order 24.
pub fn binary_tetrahedral_group() -> GroupContext {
    let q = quaternion_matrices();
    build("2.Alt(4)", &[&q.i, &q.w], &["i", "w"])
}

/// The order-2 group of signs.
pub fn sign_group() -> GroupContext {
    let q = quaternion_matrices();
    let minus = q.i.mul(&q.i);
    build("Z2", &[&minus], &["z"])
}

/// The trivial group (2x2 identity alone).
pub fn trivial_group() -> GroupContext {
    build("1", &[&ExactMatrix::identity(2)], &["e"])
}

/// The ascending normal chain of `G` as id sets:
/// trivial, `Z2`, `Q8`, `2.Alt(4)`, all of `G`.
pub fn normal_chain(g: &GroupContext) -> Vec<(String, Vec<u32>)> {
    let grp = &g.group;
    let z2 = grp.subgroup_closure(&[g.id("-1")]);
    let q8 = grp.subgroup_closure(&[g.id("i"), g.id("j")]);
    let btet = grp.subgroup_closure(&[g.id("i"), g.id("w")]);
    let all: Vec<u32> = (0..grp.order() as u32).collect();
    vec![
        ("1".to_string(), vec![0]),
        ("Z2".to_string(), z2),
        ("Q8".to_string(), q8),
        ("2.Alt(4)".to_string(), btet),
        ("G".to_string(), all),
    ]
}

/// One relation check line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub pass: bool,
}

/// Checks words `lhs=rhs` over a context's named elements.
pub fn check_relations(
    ctx: &GroupContext,
    relations: &[(&str, &str)],
) -> Result<Vec<RelationCheck>, GroupError> {
    relations
        .iter()
        .map(|(lhs, rhs)| {
            Ok(RelationCheck {
                relation: format!("{lhs}={rhs}"),
                pass: ctx.group.check_relation(&ctx.names, lhs, rhs)?,
            })
        })
        .collect()
}

/// The defining relations of the order-48 group.
pub const G_RELATIONS: &[(&str, &str)] = &[
    ("iw", "wj"),
    ("jw", "wk"),
    ("kw", "wi"),
    ("id", "-di"),
    ("jd", "-dk"),
    ("kd", "-dj"),
    ("wdw", "d"),
    ("w3", "1"),
    ("d2", "1"),
    ("i2", "-1"),
    ("j2", "-1"),
    ("k2", "-1"),
    ("ij", "k"),
    ("ji", "-k"),
    ("jk", "i"),
    ("kj", "-i"),
    ("ki", "j"),
    ("ik", "-j"),
];

/// The semidihedral presentation of the order-16 subgroup.
pub const H_RELATIONS: &[(&str, &str)] = &[("(jd)8", "1"), ("d2", "1"), ("(jd)d", "d(jd)3")];

/// Conjugacy class indices in the conventional column order
/// `1, -1, i, w, -w, d, jd, -jd`.
pub fn g_column_order(g: &GroupContext) -> Vec<usize> {
    G_COLUMN_NAMES
        .iter()
        .map(|n| class_of_named(g, n))
        .collect()
}

/// Class indices in the conventional order `1, -1, i, j, d, jd, -jd`.
pub fn h_column_order(h: &GroupContext) -> Vec<usize> {
    H_COLUMN_NAMES
        .iter()
        .map(|n| class_of_named(h, n))
        .collect()
}

/// Class indices in the conventional order `1, w, d`.
pub fn k_column_order(k: &GroupContext) -> Vec<usize> {
    K_COLUMN_NAMES
        .iter()
        .map(|n| class_of_named(k, n))
        .collect()
}

pub const G_COLUMN_NAMES: [&str; 8] = ["1", "-1", "i", "w", "-w", "d", "jd", "-jd"];
pub const H_COLUMN_NAMES: [&str; 7] = ["1", "-1", "i", "j", "d", "jd", "-jd"];
pub const K_COLUMN_NAMES: [&str; 3] = ["1", "w", "d"];

/// Column indices paired with their conventional headers.
pub fn g_columns(g: &GroupContext) -> Vec<(usize, String)> {
    g_column_order(g)
        .into_iter()
        .zip(G_COLUMN_NAMES.iter().map(|s| s.to_string()))
        .collect()
}

pub fn h_columns(h: &GroupContext) -> Vec<(usize, String)> {
    h_column_order(h)
        .into_iter()
        .zip(H_COLUMN_NAMES.iter().map(|s| s.to_string()))
        .collect()
}

pub fn k_columns(k: &GroupContext) -> Vec<(usize, String)> {
    k_column_order(k)
        .into_iter()
        .zip(K_COLUMN_NAMES.iter().map(|s| s.to_string()))
        .collect()
}

fn class_of_named(ctx: &GroupContext, name: &str) -> usize {
    let id = if let Some(body) = name.strip_prefix('-').filter(|b| *b != "1") {
        ctx.group.mul(ctx.id("-1"), ctx.id(body))
    } else {
        ctx.id(name)
    };
    ctx.group.class_of(id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedral_group_has_order_48_and_8_classes() {
        let g = octahedral_group();
        assert_eq!(g.group.order(), 48);
        assert_eq!(g.group.classes().len(), 8);
        // Class sizes and element orders in the conventional column order.
        let order_idx = g_column_order(&g);
        let sizes: Vec<usize> = order_idx
            .iter()
            .map(|&i| g.group.classes()[i].size)
            .collect();
        let orders: Vec<u32> = order_idx
            .iter()
            .map(|&i| g.group.classes()[i].element_order)
            .collect();
        assert_eq!(sizes, vec![1, 1, 6, 8, 8, 12, 6, 6]);
        assert_eq!(orders, vec![1, 2, 4, 3, 6, 2, 8, 8]);
    }

    #[test]
    fn semidihedral_group_has_order_16_and_7_classes() {
        let h = semidihedral_group();
        assert_eq!(h.group.order(), 16);
        assert_eq!(h.group.classes().len(), 7);
        let order_idx = h_column_order(&h);
        let sizes: Vec<usize> = order_idx
            .iter()
            .map(|&i| h.group.classes()[i].size)
            .collect();
        let orders: Vec<u32> = order_idx
            .iter()
            .map(|&i| h.group.classes()[i].element_order)
            .collect();
        assert_eq!(sizes, vec![1, 1, 2, 4, 4, 2, 2]);
        assert_eq!(orders, vec![1, 2, 4, 4, 2, 8, 8]);
    }

    #[test]
    fn lepton_group_is_sym3() {
        let k = lepton_group();
        assert_eq!(k.group.order(), 6);
        assert_eq!(k.group.classes().len(), 3);
        let sizes: Vec<usize> = k.group.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn defining_relations_hold() {
        let g = octahedral_group();
        for check in check_relations(&g, G_RELATIONS).unwrap() {
            assert!(check.pass, "relation {} failed", check.relation);
        }
        let h = semidihedral_group();
        for check in check_relations(&h, H_RELATIONS).unwrap() {
            assert!(check.pass, "relation {} failed", check.relation);
        }
    }

    #[test]
    fn swapped_generators_break_relations() {
        // Negative control: reading `i` as `d` and `d` as `i` must break
        // at least one defining relation.
        let g = octahedral_group();
        let mut swapped = g.names.clone();
        let i = swapped["i"];
        let d = swapped["d"];
        swapped.insert("i".into(), d);
        swapped.insert("d".into(), i);
        let any_fail = G_RELATIONS
            .iter()
            .any(|(lhs, rhs)| !g.group.check_relation(&swapped, lhs, rhs).unwrap());
        assert!(any_fail);
    }

    #[test]
    fn centralizer_sizes() {
        let g = octahedral_group();
        assert_eq!(g.group.centralizer(0).len(), 48);
        assert_eq!(g.group.centralizer(g.id("-1")).len(), 48);
        // Orbit–stabilizer: |class(i)| = 6, so the centralizer has order 8;
        // confirmed by the brute-force count over all 48 elements.
        let i = g.id("i");
        let class_size = g.group.classes()[g.group.class_of(i)].size;
        assert_eq!(class_size, 6);
        assert_eq!(g.group.centralizer(i).len(), 48 / class_size);
    }

    #[test]
    fn normal_chain_orders() {
        let g = octahedral_group();
        let chain = normal_chain(&g);
        let sizes: Vec<usize> = chain.iter().map(|(_, ids)| ids.len()).collect();
        assert_eq!(sizes, vec![1, 2, 8, 24, 48]);
        for (_, ids) in &chain {
            assert!(g.group.is_subgroup(ids));
            assert!(g.group.is_normal(ids));
        }
        // Inclusions.
        for pair in chain.windows(2) {
            let small: std::collections::BTreeSet<u32> = pair[0].1.iter().copied().collect();
            let big: std::collections::BTreeSet<u32> = pair[1].1.iter().copied().collect();
            assert!(small.is_subset(&big));
        }
    }

    #[test]
    fn quotient_chain_orders_and_projected_relations() {
        let g = octahedral_group();
        let chain = normal_chain(&g);
        let expected = [48usize, 24, 6, 2, 1];
        for ((_, kernel), expect) in chain.iter().zip(expected) {
            let (q, map) = g.group.quotient(kernel).unwrap();
            assert_eq!(q.order(), expect);
            assert_eq!(g.group.order(), kernel.len() * q.order());
            // Exhaustive homomorphism check.
            for a in 0..48u32 {
                for b in 0..48u32 {
                    assert_eq!(
                        map.image_of[g.group.mul(a, b) as usize],
                        q.mul(map.image_of[a as usize], map.image_of[b as usize])
                    );
                }
            }
        }
        // In G/{±1} the images x, y, z of i, j, k square to 1 and satisfy xyz = 1.
        let (q, map) = g.group.quotient(&chain[1].1).unwrap();
        let x = map.image_of[g.id("i") as usize];
        let y = map.image_of[g.id("j") as usize];
        let z = map.image_of[g.id("k") as usize];
        assert_eq!(q.mul(x, x), 0);
        assert_eq!(q.mul(y, y), 0);
        assert_eq!(q.mul(z, z), 0);
        assert_eq!(q.mul(q.mul(x, y), z), 0);
    }

    #[test]
    fn cayley_invariants_exhaustive() {
        for ctx in [octahedral_group(), semidihedral_group()] {
            let g = &ctx.group;
            let n = g.order() as u32;
            // Associativity over every triple.
            for a in 0..n {
                for b in 0..n {
                    let ab = g.mul(a, b);
                    for c in 0..n {
                        assert_eq!(g.mul(ab, c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
            // Element orders divide the group order and powers cycle.
            for x in 0..n {
                let ord = g.element_order(x);
                assert_eq!(n % ord, 0, "order of {} divides |G|", g.display(x));
                assert_eq!(g.power(x, ord as i64), 0);
                assert_eq!(g.power(x, (ord + 1) as i64), x);
            }
            // Conjugation preserves classes.
            for x in 0..n {
                for h in 0..n {
                    let conj = g.mul(g.mul(h, x), g.inv(h));
                    assert_eq!(g.class_of(conj), g.class_of(x));
                }
            }
        }
    }

    #[test]
    fn quotient_by_non_normal_subgroup_fails() {
        let g = octahedral_group();
        let d_subgroup = g.group.subgroup_closure(&[g.id("d")]);
        assert_eq!(d_subgroup.len(), 2);
        assert_eq!(
            g.group.quotient(&d_subgroup).unwrap_err(),
            GroupError::NotNormal
        );
    }

    #[test]
    fn power_map_class_examples() {
        let g = octahedral_group();
        // Squaring sends the class of i to the class of -1.
        let sq = g.group.power_map(2);
        assert_eq!(
            g.group.class_of(sq[g.id("i") as usize]),
            g.group.class_of(g.id("-1"))
        );
        // Cubing sends the class of w to the identity class.
        let cube = g.group.power_map(3);
        assert_eq!(
            g.group.class_of(cube[g.id("w") as usize]),
            g.group.class_of(0)
        );
    }

    #[test]
    fn display_names_follow_quaternion_normal_form() {
        let g = octahedral_group();
        assert_eq!(g.group.display(0), "1");
        assert_eq!(g.group.display(g.id("-1")), "-1");
        assert_eq!(g.group.display(g.id("jd")), "jd");
        let mut seen = std::collections::BTreeSet::new();
        for x in 0..48u32 {
            assert!(seen.insert(g.group.display(x).to_string()));
        }
    }

    #[test]
    fn embeddings_into_g() {
        let g = octahedral_group();
        let h = semidihedral_group();
        let k = lepton_group();
        let emb_h = g.group.embedding_of(&h.group).unwrap();
        assert_eq!(emb_h.len(), 16);
        let emb_k = g.group.embedding_of(&k.group).unwrap();
        assert_eq!(emb_k.len(), 6);
        // The embedding respects multiplication.
        for a in 0..16u32 {
            for b in 0..16u32 {
                assert_eq!(
                    emb_h[h.group.mul(a, b) as usize],
                    g.group.mul(emb_h[a as usize], emb_h[b as usize])
                );
            }
        }
    }

    #[test]
    fn subgroup_context_orders() {
        assert_eq!(quaternion_group().group.order(), 8);
        assert_eq!(binary_tetrahedral_group().group.order(), 24);
        assert_eq!(sign_group().group.order(), 2);
        assert_eq!(trivial_group().group.order(), 1);
    }
}
