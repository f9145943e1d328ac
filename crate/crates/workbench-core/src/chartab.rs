//! Character tables computed from scratch by the modular (Dixon) method,
//! plus the character-level functors: inner products, decomposition into
//! irreducibles, tensor/symmetric/antisymmetric powers, the mixed cube,
//! duals, restriction, induction, Frobenius–Schur indicators and real
//! Wedderburn types.
//!
//! The table algorithm works over a prime `p ≡ 1 (mod exponent)` with
//! `p > 2·sqrt(|G|)`: class-sum matrices are split into common eigenspaces
//! over `F_p`, degrees are recovered from the orthogonality relation, and
//! the modular values are lifted to exact cyclotomic numbers through a fixed
//! primitive root of unity mod `p`. The reference tables therefore serve as
//! independent cross-checks, never as inputs.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::exact::{is_prime, primitive_root};
use crate::exact::{rat, rat_int, Cyclotomic, ModMatrix, ModularScalar, Rational};
use crate::group::FiniteGroup;
use crate::octa::GroupContext;

/// Default prime for the modular algorithm: `73 ≡ 1 (mod 24)` and
/// `73 > 2·sqrt(48)`.
pub const DEFAULT_PRIME: u64 = 73;

/// Hard cap on table computation; closures here never approach it.
pub const MAX_TABLE_ORDER: usize = 500;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error(
        "prime {prime} unsuitable: need p prime, p ≡ 1 (mod {exponent}), p > 2·sqrt(|G|), p ∤ |G|"
    )]
    PrimeUnsuitable { prime: u64, exponent: u32 },
    #[error("group exponent {0} does not divide 24; values would leave the coefficient field")]
    ExponentUnsupported(u32),
    #[error("group order {0} exceeds the table cap of {MAX_TABLE_ORDER}")]
    OrderTooLarge(usize),
    #[error("class function is not a genuine character: multiplicity of `{label}` is {value}")]
    NonCharacter { label: String, value: String },
    #[error("indicator of `{0}` is not in {{-1, 0, +1}}")]
    BadIndicator(String),
    #[error("internal degeneracy in the eigenspace split: {0}")]
    Degenerate(String),
}

/// A class function with one exact value per conjugacy class, in the group's
/// canonical class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub label: String,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    pub fn degree(&self, g: &FiniteGroup) -> Rational {
        let id_class = g.class_of(0);
        self.values[id_class]
            .as_rational()
            .expect("degree of a character is rational")
    }

    pub fn dual(&self) -> Character {
        Character {
            label: format!("Dual({})", self.label),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }
}

/// A complete list of irreducible characters, canonically ordered.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub prime: u64,
    pub chars: Vec<Character>,
}

impl CharacterTable {
    pub fn by_label(&self, label: &str) -> Option<&Character> {
        self.chars.iter().find(|c| c.label == label)
    }

    pub fn labels(&self) -> Vec<String> {
        self.chars.iter().map(|c| c.label.clone()).collect()
    }
}

/// Computes the full irreducible character table of `g`.
pub fn character_table(g: &FiniteGroup, prime: u64) -> Result<CharacterTable, CharError> {
    if g.order() > MAX_TABLE_ORDER {
        return Err(CharError::OrderTooLarge(g.order()));
    }
    let exponent = g.exponent();
    if 24 % exponent != 0 {
        return Err(CharError::ExponentUnsupported(exponent));
    }
    let order = g.order() as u64;
    let suitable = is_prime(prime)
        && (prime - 1).is_multiple_of(exponent as u64)
        && prime * prime > 4 * order
        && !order.is_multiple_of(prime);
    if !suitable {
        return Err(CharError::PrimeUnsuitable { prime, exponent });
    }
    let p = prime;
    let m = g.classes().len();
    let id_class = g.class_of(0);

    // Class-sum matrices A_i with (A_i)[j][k] = #{x in C_i : x⁻¹·r_k in C_j}.
    let mut class_mats: Vec<ModMatrix> = Vec::with_capacity(m);
    for i in 0..m {
        let mut a = ModMatrix::zero(m, m, p);
        for k in 0..m {
            let rk = g.classes()[k].rep;
            for &x in &g.classes()[i].members {
                let j = g.class_of(g.mul(g.inv(x), rk));
                let v = (a.at(j, k) + 1) % p;
                a.set(j, k, v);
            }
        }
        class_mats.push(a);
    }

    // Split F_p^m into common one-dimensional eigenspaces.
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![(0..m)
        .map(|k| {
            let mut e = vec![0u64; m];
            e[k] = 1;
            e
        })
        .collect()];
    for a in &class_mats {
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next: Vec<Vec<Vec<u64>>> = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let image: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| {
                    (0..m)
                        .map(|r| {
                            let mut acc = 0u64;
                            for (c, &vc) in v.iter().enumerate() {
                                acc = (acc + a.at(r, c) * vc) % p;
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            let mut consumed = 0;
            for lambda in 0..p {
                if consumed == d {
                    break;
                }
                // Coefficient system: (A - lambda)·(basis·c) = 0.
                let mut sys = ModMatrix::zero(m, d, p);
                for (col, (img, v)) in image.iter().zip(basis.iter()).enumerate() {
                    for r in 0..m {
                        let val = (img[r] + p - lambda * v[r] % p) % p;
                        sys.set(r, col, val);
                    }
                }
                let kernel = sys.nullspace();
                if kernel.is_empty() {
                    continue;
                }
                let vectors: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|coef| {
                        (0..m)
                            .map(|r| {
                                let mut acc = 0u64;
                                for (c, &wc) in coef.iter().enumerate() {
                                    acc = (acc + wc * basis[c][r]) % p;
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect();
                consumed += vectors.len();
                next.push(vectors);
            }
            if consumed != d {
                return Err(CharError::Degenerate(format!(
                    "eigenvalues did not exhaust a {d}-dimensional subspace"
                )));
            }
        }
        subspaces = next;
    }
    if subspaces.len() != m || subspaces.iter().any(|s| s.len() != 1) {
        return Err(CharError::Degenerate(format!(
            "expected {m} common eigenlines, found {}",
            subspaces.len()
        )));
    }

    let inv_class: Vec<usize> = (0..m)
        .map(|i| g.class_of(g.inv(g.classes()[i].rep)))
        .collect();
    let theta =
        ModularScalar::new(primitive_root(p).unwrap() as i64, p).pow((p - 1) / exponent as u64);
    let mut chars: Vec<Character> = Vec::with_capacity(m);
    for sub in &subspaces {
        let raw = &sub[0];
        if raw[id_class] == 0 {
            return Err(CharError::Degenerate(
                "eigenvector vanishes at the identity class".into(),
            ));
        }
        // Normalized so the identity entry is 1, the entries are the central
        // character values w_i = |C_i|·chi(g_i)/chi(1) mod p.
        let norm = ModularScalar {
            residue: raw[id_class],
            modulus: p,
        }
        .inv();
        let omega: Vec<u64> = raw.iter().map(|&v| v * norm.residue % p).collect();

        // Degree from sum_i w_i·w_{i*}/|C_i| = |G|/d².
        let mut s = ModularScalar::new(0, p);
        for i in 0..m {
            let size_inv = ModularScalar::new(g.classes()[i].size as i64, p).inv();
            let term = ModularScalar {
                residue: omega[i],
                modulus: p,
            }
            .mul(ModularScalar {
                residue: omega[inv_class[i]],
                modulus: p,
            })
            .mul(size_inv);
            s = s.add(term);
        }
        let d_sq = ModularScalar::new(order as i64, p).mul(s.inv()).residue;
        // p > 2·sqrt(|G|) makes the positive square root below p/2 unique.
        let degree = (1..p)
            .find(|r| r * r % p == d_sq && r * 2 < p)
            .ok_or_else(|| CharError::Degenerate("no small square root for a degree".into()))?;

        let mod_values: Vec<u64> = (0..m)
            .map(|i| {
                let size_inv = ModularScalar::new(g.classes()[i].size as i64, p).inv();
                degree * omega[i] % p * size_inv.residue % p
            })
            .collect();

        // Lift each class value: recover the multiplicities of the n-th
        // roots of unity among the representing matrix eigenvalues.
        let mut values = Vec::with_capacity(m);
        for i in 0..m {
            let rep = g.classes()[i].rep;
            let n = g.element_order(rep) as u64;
            let theta_n_inv = theta.pow(exponent as u64 / n).inv();
            let n_inv = ModularScalar::new(n as i64, p).inv();
            let mut value = Cyclotomic::zero();
            let mut total = 0u64;
            for l in 0..n {
                let mut acc = ModularScalar::new(0, p);
                for t in 0..n {
                    let cls = g.class_of(g.power(rep, t as i64));
                    let term = ModularScalar {
                        residue: mod_values[cls],
                        modulus: p,
                    }
                    .mul(theta_n_inv.pow(l * t % n));
                    acc = acc.add(term);
                }
                let mult = acc.mul(n_inv).residue;
                if mult > degree {
                    return Err(CharError::Degenerate(format!(
                        "eigenvalue multiplicity {mult} exceeds degree {degree}"
                    )));
                }
                total += mult;
                if mult > 0 {
                    let zeta = Cyclotomic::zeta_pow((24 / n * l) as i64);
                    value = &value + &zeta.scale(&rat_int(mult as i64));
                }
            }
            if total != degree {
                return Err(CharError::Degenerate(format!(
                    "eigenvalue multiplicities sum to {total}, degree is {degree}"
                )));
            }
            values.push(value);
        }
        chars.push(Character {
            label: String::new(),
            values,
        });
    }

    // Canonical order: by degree, then by serialized values.
    chars.sort_by_key(|c| {
        let deg = c.values[id_class]
            .as_rational()
            .and_then(|r| r.to_integer().to_u64());
        let key: Vec<String> = c
            .values
            .iter()
            .map(Cyclotomic::to_canonical_string)
            .collect();
        (deg, key)
    });
    for (idx, c) in chars.iter_mut().enumerate() {
        c.label = format!("X{}", idx + 1);
    }

    let table = CharacterTable { prime: p, chars };
    verify_table(g, &table)?;
    Ok(table)
}

/// Exact orthonormality and degree checks on a freshly computed table.
fn verify_table(g: &FiniteGroup, table: &CharacterTable) -> Result<(), CharError> {
    let mut degree_sum = rat_int(0);
    for (a_idx, a) in table.chars.iter().enumerate() {
        let deg = a.degree(g);
        degree_sum += &deg * &deg;
        for (b_idx, b) in table.chars.iter().enumerate() {
            let ip = inner_product(g, a, b);
            let expected = if a_idx == b_idx {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            };
            if ip != expected {
                return Err(CharError::Degenerate(format!(
                    "orthogonality failed between rows {a_idx} and {b_idx}"
                )));
            }
        }
    }
    if degree_sum != rat_int(g.order() as i64) {
        return Err(CharError::Degenerate(
            "degrees do not satisfy sum d² = |G|".into(),
        ));
    }
    Ok(())
}

/// `(1/|G|) · Σ_g a(g)·conj(b(g))`, computed classwise.
pub fn inner_product(g: &FiniteGroup, a: &Character, b: &Character) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    for (i, class) in g.classes().iter().enumerate() {
        let term = a.values[i]
            .mul(&b.values[i].conj())
            .scale(&rat_int(class.size as i64));
        acc = &acc + &term;
    }
    acc.scale(&rat(1, g.order() as i64))
}

/// Multiplicities of the irreducibles inside a class function, in table order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub entries: Vec<(String, u32)>,
}

impl Decomposition {
    pub fn as_map(&self) -> BTreeMap<String, u32> {
        self.entries.iter().cloned().collect()
    }

    pub fn total_degree(&self, g: &FiniteGroup, table: &CharacterTable) -> Rational {
        let mut acc = rat_int(0);
        for (label, mult) in &self.entries {
            let chi = table.by_label(label).expect("label from the same table");
            acc += chi.degree(g) * rat_int(*mult as i64);
        }
        acc
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(label, mult)| {
                if *mult == 1 {
                    label.clone()
                } else {
                    format!("{mult}*{label}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Resolves a class function into exact non-negative multiplicities.
pub fn decompose(
    g: &FiniteGroup,
    table: &CharacterTable,
    a: &Character,
) -> Result<Decomposition, CharError> {
    let mut entries = Vec::new();
    for chi in &table.chars {
        let ip = inner_product(g, a, chi);
        let value = ip
            .as_rational()
            .filter(|r| r.is_integer() && !r.is_negative());
        match value {
            Some(r) => {
                let mult = r
                    .to_integer()
                    .to_u32()
                    .ok_or_else(|| CharError::NonCharacter {
                        label: chi.label.clone(),
                        value: ip.to_pretty_string(),
                    })?;
                if mult > 0 {
                    entries.push((chi.label.clone(), mult));
                }
            }
            None => {
                return Err(CharError::NonCharacter {
                    label: chi.label.clone(),
                    value: ip.to_pretty_string(),
                })
            }
        }
    }
    Ok(Decomposition { entries })
}

/// Sum of `mult` copies of each irreducible: inverse of [`decompose`].
pub fn recompose(g: &FiniteGroup, table: &CharacterTable, d: &Decomposition) -> Character {
    let m = g.classes().len();
    let mut values = vec![Cyclotomic::zero(); m];
    for (label, mult) in &d.entries {
        let chi = table.by_label(label).expect("label from the same table");
        for (i, value) in values.iter_mut().enumerate() {
            *value = &*value + &chi.values[i].scale(&rat_int(*mult as i64));
        }
    }
    Character {
        label: format!("({d})"),
        values,
    }
}

pub fn add_characters(a: &Character, b: &Character) -> Character {
    Character {
        label: format!("{}+{}", a.label, b.label),
        values: a.values.iter().zip(&b.values).map(|(x, y)| x + y).collect(),
    }
}

/// Pointwise product: the character of the tensor product.
pub fn tensor(a: &Character, b: &Character) -> Character {
    Character {
        label: format!("{}*{}", a.label, b.label),
        values: a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| x.mul(y))
            .collect(),
    }
}

fn power_class_values(g: &FiniteGroup, a: &Character, n: i64) -> Vec<Cyclotomic> {
    g.classes()
        .iter()
        .map(|c| a.values[g.class_of(g.power(c.rep, n))].clone())
        .collect()
}

/// Symmetric square: `(a(g)² + a(g²))/2` classwise.
pub fn sym2(g: &FiniteGroup, a: &Character) -> Character {
    let sq = power_class_values(g, a, 2);
    Character {
        label: format!("S2({})", a.label),
        values: a
            .values
            .iter()
            .zip(sq)
            .map(|(v, v2)| (&v.mul(v) + &v2).scale(&rat(1, 2)))
            .collect(),
    }
}

/// Antisymmetric square: `(a(g)² - a(g²))/2` classwise.
pub fn alt2(g: &FiniteGroup, a: &Character) -> Character {
    let sq = power_class_values(g, a, 2);
    Character {
        label: format!("L2({})", a.label),
        values: a
            .values
            .iter()
            .zip(sq)
            .map(|(v, v2)| (&v.mul(v) - &v2).scale(&rat(1, 2)))
            .collect(),
    }
}

/// Symmetric cube: `(a(g)³ + 3·a(g)·a(g²) + 2·a(g³))/6`.
pub fn sym3(g: &FiniteGroup, a: &Character) -> Character {
    let sq = power_class_values(g, a, 2);
    let cu = power_class_values(g, a, 3);
    Character {
        label: format!("S3({})", a.label),
        values: a
            .values
            .iter()
            .zip(sq.iter().zip(cu.iter()))
            .map(|(v, (v2, v3))| {
                let t = &v.mul(v).mul(v) + &v.mul(v2).scale(&rat_int(3));
                (&t + &v3.scale(&rat_int(2))).scale(&rat(1, 6))
            })
            .collect(),
    }
}

/// Antisymmetric cube: `(a(g)³ - 3·a(g)·a(g²) + 2·a(g³))/6`.
pub fn alt3(g: &FiniteGroup, a: &Character) -> Character {
    let sq = power_class_values(g, a, 2);
    let cu = power_class_values(g, a, 3);
    Character {
        label: format!("L3({})", a.label),
        values: a
            .values
            .iter()
            .zip(sq.iter().zip(cu.iter()))
            .map(|(v, (v2, v3))| {
                let t = &v.mul(v).mul(v) - &v.mul(v2).scale(&rat_int(3));
                (&t + &v3.scale(&rat_int(2))).scale(&rat(1, 6))
            })
            .collect(),
    }
}

/// Mixed-symmetry constituent of the cube, `(a(g)³ - a(g³))/3`; it occurs
/// twice inside the full tensor cube.
pub fn mid3(g: &FiniteGroup, a: &Character) -> Character {
    let cu = power_class_values(g, a, 3);
    Character {
        label: format!("M3({})", a.label),
        values: a
            .values
            .iter()
            .zip(cu)
            .map(|(v, v3)| (&v.mul(v).mul(v) - &v3).scale(&rat(1, 3)))
            .collect(),
    }
}

/// Restriction along an embedding: value at a subgroup class is the parent
/// value at the embedded representative.
pub fn restrict(
    parent: &FiniteGroup,
    a: &Character,
    sub: &FiniteGroup,
    embedding: &[u32],
) -> Character {
    Character {
        label: format!("Res({})", a.label),
        values: sub
            .classes()
            .iter()
            .map(|c| a.values[parent.class_of(embedding[c.rep as usize])].clone())
            .collect(),
    }
}

/// Induction along an embedding:
/// `Ind(a)(x) = (1/|sub|)·Σ_{y : y⁻¹xy ∈ sub} a(y⁻¹xy)`.
pub fn induce(
    sub: &FiniteGroup,
    a: &Character,
    parent: &FiniteGroup,
    embedding: &[u32],
) -> Character {
    let mut parent_to_sub: BTreeMap<u32, u32> = BTreeMap::new();
    for (sub_id, &parent_id) in embedding.iter().enumerate() {
        parent_to_sub.insert(parent_id, sub_id as u32);
    }
    let values = parent
        .classes()
        .iter()
        .map(|c| {
            let x = c.rep;
            let mut acc = Cyclotomic::zero();
            for y in 0..parent.order() as u32 {
                let conj = parent.mul(parent.mul(parent.inv(y), x), y);
                if let Some(&s) = parent_to_sub.get(&conj) {
                    acc = &acc + &a.values[sub.class_of(s)];
                }
            }
            acc.scale(&rat(1, sub.order() as i64))
        })
        .collect();
    Character {
        label: format!("Ind({})", a.label),
        values,
    }
}

/// Frobenius–Schur indicator `(1/|G|)·Σ_g a(g²)`, for irreducible `a`.
pub fn fs_indicator(g: &FiniteGroup, a: &Character) -> Result<i32, CharError> {
    let mut acc = Cyclotomic::zero();
    for class in g.classes() {
        let v = &a.values[g.class_of(g.power(class.rep, 2))];
        acc = &acc + &v.scale(&rat_int(class.size as i64));
    }
    let ind = acc.scale(&rat(1, g.order() as i64));
    match ind.as_rational() {
        Some(r) if r == rat_int(1) => Ok(1),
        Some(r) if r == rat_int(0) => Ok(0),
        Some(r) if r == rat_int(-1) => Ok(-1),
        _ => Err(CharError::BadIndicator(a.label.clone())),
    }
}

/// Kind of a simple block of a real group algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockKind {
    Real,
    Complex,
    Quaternion,
}

impl BlockKind {
    fn symbol(self) -> &'static str {
        match self {
            BlockKind::Real => "R",
            BlockKind::Complex => "C",
            BlockKind::Quaternion => "H",
        }
    }

    fn real_dim_factor(self) -> usize {
        match self {
            BlockKind::Real => 1,
            BlockKind::Complex => 2,
            BlockKind::Quaternion => 4,
        }
    }
}

/// Multiset of matrix blocks `M_n(R)`, `M_n(C)`, `M_n(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedderburnType {
    /// Sorted `(size, kind)` pairs.
    pub blocks: Vec<(usize, BlockKind)>,
}

impl WedderburnType {
    pub fn from_blocks(mut blocks: Vec<(usize, BlockKind)>) -> Self {
        blocks.sort();
        WedderburnType { blocks }
    }

    /// Parses a display such as `2R + M2(R) + M2(C) + 2M3(R) + M4(R)`.
    pub fn parse(text: &str) -> Option<Self> {
        let mut blocks = Vec::new();
        for part in text.split('+') {
            let t = part.trim();
            if t.is_empty() {
                return None;
            }
            let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
            let (count, rest) = if digits.is_empty() {
                (1usize, t)
            } else {
                (digits.parse().ok()?, t[digits.len()..].trim())
            };
            let (size, kind) = if let Some(inner) = rest.strip_prefix('M') {
                let size_digits: String =
                    inner.chars().take_while(|c| c.is_ascii_digit()).collect();
                let size: usize = size_digits.parse().ok()?;
                let kind = match inner[size_digits.len()..].trim() {
                    "(R)" => BlockKind::Real,
                    "(C)" => BlockKind::Complex,
                    "(H)" => BlockKind::Quaternion,
                    _ => return None,
                };
                (size, kind)
            } else {
                match rest {
                    "R" => (1, BlockKind::Real),
                    "C" => (1, BlockKind::Complex),
                    "H" => (1, BlockKind::Quaternion),
                    _ => return None,
                }
            };
            for _ in 0..count {
                blocks.push((size, kind));
            }
        }
        Some(WedderburnType::from_blocks(blocks))
    }

    pub fn real_dimension(&self) -> usize {
        self.blocks
            .iter()
            .map(|(n, k)| n * n * k.real_dim_factor())
            .sum()
    }
}

impl fmt::Display for WedderburnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("0");
        }
        let mut counts: Vec<((usize, BlockKind), usize)> = Vec::new();
        for &b in &self.blocks {
            match counts.last_mut() {
                Some((key, count)) if *key == b => *count += 1,
                _ => counts.push((b, 1)),
            }
        }
        let parts: Vec<String> = counts
            .into_iter()
            .map(|((size, kind), count)| {
                let body = if size == 1 {
                    kind.symbol().to_string()
                } else {
                    format!("M{size}({})", kind.symbol())
                };
                if count == 1 {
                    body
                } else {
                    format!("{count}{body}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Real Wedderburn type from indicators: `+1` gives a real block of the
/// degree, `-1` a quaternionic block of half the degree, and each conjugate
/// pair of indicator-0 rows one complex block.
pub fn real_wedderburn(
    g: &FiniteGroup,
    table: &CharacterTable,
) -> Result<WedderburnType, CharError> {
    let mut blocks = Vec::new();
    let mut consumed = vec![false; table.chars.len()];
    for (idx, chi) in table.chars.iter().enumerate() {
        if consumed[idx] {
            continue;
        }
        consumed[idx] = true;
        let degree = chi
            .degree(g)
            .to_integer()
            .to_usize()
            .expect("character degree is a small positive integer");
        match fs_indicator(g, chi)? {
            1 => blocks.push((degree, BlockKind::Real)),
            -1 => {
                debug_assert_eq!(degree % 2, 0);
                blocks.push((degree / 2, BlockKind::Quaternion));
            }
            _ => {
                let conj_values: Vec<Cyclotomic> =
                    chi.values.iter().map(Cyclotomic::conj).collect();
                let partner = table
                    .chars
                    .iter()
                    .position(|c| c.values == conj_values)
                    .ok_or_else(|| {
                        CharError::Degenerate(format!("no conjugate partner for `{}`", chi.label))
                    })?;
                if consumed[partner] {
                    return Err(CharError::Degenerate(format!(
                        "conjugate pairing failed at `{}`",
                        chi.label
                    )));
                }
                consumed[partner] = true;
                blocks.push((degree, BlockKind::Complex));
            }
        }
    }
    let wt = WedderburnType::from_blocks(blocks);
    debug_assert_eq!(wt.real_dimension(), g.order());
    Ok(wt)
}

/// Complex Wedderburn type: one `M_n(C)` per irreducible of degree `n`.
pub fn complex_wedderburn(g: &FiniteGroup, table: &CharacterTable) -> WedderburnType {
    WedderburnType::from_blocks(
        table
            .chars
            .iter()
            .map(|chi| {
                let d = chi.degree(g).to_integer().to_usize().expect("small degree");
                (d, BlockKind::Complex)
            })
            .collect(),
    )
}

/// Conventional row-label order for the order-48 group.
pub const G_LABELS: [&str; 8] = ["1+", "1-", "2_0", "3+", "3-", "2+", "2-", "4_0"];
/// Conventional row-label order for the order-16 subgroup.
pub const H_LABELS: [&str; 7] = ["1a", "1b", "1c", "1d", "2a", "2b", "2c"];
/// Conventional row-label order for the order-6 subgroup.
pub const K_LABELS: [&str; 3] = ["1+", "1-", "2_0"];

fn sort_by_label_order(table: &mut CharacterTable, order: &[&str]) {
    table.chars.sort_by_key(|c| {
        order
            .iter()
            .position(|l| *l == c.label)
            .expect("all labels assigned")
    });
}

fn ensure_distinct(table: &CharacterTable) -> Result<(), CharError> {
    let labels: std::collections::BTreeSet<&str> =
        table.chars.iter().map(|c| c.label.as_str()).collect();
    if labels.len() != table.chars.len() {
        return Err(CharError::Degenerate("label alignment collided".into()));
    }
    Ok(())
}

/// Renames the computed rows of the order-48 table to the conventional
/// labels, pinned by distinguishing values: `1±`/`3±` by the value at the
/// class of `d`, `2+` by value `i·sqrt2` at the class of `jd`, `2_0` by
/// triviality on `-1`.
pub fn align_g_labels(table: &mut CharacterTable, g: &GroupContext) -> Result<(), CharError> {
    let cz = g.class_index("-1");
    let cd = g.class_index("d");
    let cjd = g.class_index("jd");
    let one = Cyclotomic::one();
    let two = Cyclotomic::from_int(2);
    let i_sqrt2 = Cyclotomic::i().mul(&Cyclotomic::sqrt2());
    for chi in table.chars.iter_mut() {
        let deg = chi.degree(&g.group);
        let label = if deg == rat_int(1) {
            if chi.values[cd] == one {
                "1+"
            } else {
                "1-"
            }
        } else if deg == rat_int(2) {
            if chi.values[cz] == two {
                "2_0"
            } else if chi.values[cjd] == i_sqrt2 {
                "2+"
            } else {
                "2-"
            }
        } else if deg == rat_int(3) {
            if chi.values[cd] == one {
                "3+"
            } else {
                "3-"
            }
        } else {
            "4_0"
        };
        chi.label = label.to_string();
    }
    ensure_distinct(table)?;
    sort_by_label_order(table, &G_LABELS);
    Ok(())
}

/// Conventional labels for the order-16 subgroup, pinned by the values at
/// `j`, `d`, `-1` and `jd`.
pub fn align_h_labels(table: &mut CharacterTable, h: &GroupContext) -> Result<(), CharError> {
    let cz = h.class_index("-1");
    let cj = h.class_index("j");
    let cd = h.class_index("d");
    let cjd = h.class_index("jd");
    let one = Cyclotomic::one();
    let two = Cyclotomic::from_int(2);
    let i_sqrt2 = Cyclotomic::i().mul(&Cyclotomic::sqrt2());
    for chi in table.chars.iter_mut() {
        let deg = chi.degree(&h.group);
        let label = if deg == rat_int(1) {
            match (chi.values[cj] == one, chi.values[cd] == one) {
                (true, true) => "1a",
                (true, false) => "1b",
                (false, true) => "1c",
                (false, false) => "1d",
            }
        } else if chi.values[cz] == two {
            "2a"
        } else if chi.values[cjd] == i_sqrt2 {
            "2b"
        } else {
            "2c"
        };
        chi.label = label.to_string();
    }
    ensure_distinct(table)?;
    sort_by_label_order(table, &H_LABELS);
    Ok(())
}

/// Conventional labels for the order-6 subgroup.
pub fn align_k_labels(table: &mut CharacterTable, k: &GroupContext) -> Result<(), CharError> {
    let cd = k.class_index("d");
    let one = Cyclotomic::one();
    for chi in table.chars.iter_mut() {
        let deg = chi.degree(&k.group);
        chi.label = if deg == rat_int(1) {
            if chi.values[cd] == one {
                "1+".to_string()
            } else {
                "1-".to_string()
            }
        } else {
            "2_0".to_string()
        };
    }
    ensure_distinct(table)?;
    sort_by_label_order(table, &K_LABELS);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octa;

    fn c(s: &str) -> Cyclotomic {
        Cyclotomic::parse_pretty(s).unwrap()
    }

    /// The known character table of the order-48 group, rows in conventional
    /// label order, columns in the conventional class order
    /// `1, -1, i, w, -w, d, jd, -jd`. Used as an independent cross-check of
    /// the modular computation.
    pub(crate) fn reference_g_table() -> Vec<(&'static str, [&'static str; 8])> {
        vec![
            ("1+", ["1", "1", "1", "1", "1", "1", "1", "1"]),
            ("1-", ["1", "1", "1", "1", "1", "-1", "-1", "-1"]),
            ("2_0", ["2", "2", "2", "-1", "-1", "0", "0", "0"]),
            ("3+", ["3", "3", "-1", "0", "0", "1", "-1", "-1"]),
            ("3-", ["3", "3", "-1", "0", "0", "-1", "1", "1"]),
            (
                "2+",
                ["2", "-2", "0", "-1", "1", "0", "i*sqrt2", "-1*i*sqrt2"],
            ),
            (
                "2-",
                ["2", "-2", "0", "-1", "1", "0", "-1*i*sqrt2", "i*sqrt2"],
            ),
            ("4_0", ["4", "-4", "0", "1", "-1", "0", "0", "0"]),
        ]
    }

    /// The known table of the order-16 subgroup, columns
    /// `1, -1, i, j, d, jd, -jd`.
    pub(crate) fn reference_h_table() -> Vec<(&'static str, [&'static str; 7])> {
        vec![
            ("1a", ["1", "1", "1", "1", "1", "1", "1"]),
            ("1b", ["1", "1", "1", "1", "-1", "-1", "-1"]),
            ("1c", ["1", "1", "1", "-1", "1", "-1", "-1"]),
            ("1d", ["1", "1", "1", "-1", "-1", "1", "1"]),
            ("2a", ["2", "2", "-2", "0", "0", "0", "0"]),
            ("2b", ["2", "-2", "0", "0", "0", "i*sqrt2", "-1*i*sqrt2"]),
            ("2c", ["2", "-2", "0", "0", "0", "-1*i*sqrt2", "i*sqrt2"]),
        ]
    }

    fn g_table() -> (octa::GroupContext, CharacterTable) {
        let g = octa::octahedral_group();
        let mut t = character_table(&g.group, DEFAULT_PRIME).unwrap();
        align_g_labels(&mut t, &g).unwrap();
        (g, t)
    }

    fn h_table() -> (octa::GroupContext, CharacterTable) {
        let h = octa::semidihedral_group();
        let mut t = character_table(&h.group, DEFAULT_PRIME).unwrap();
        align_h_labels(&mut t, &h).unwrap();
        (h, t)
    }

    #[test]
    fn g_table_matches_reference_entrywise() {
        let (g, t) = g_table();
        let col = octa::g_column_order(&g);
        for (label, row) in reference_g_table() {
            let chi = t.by_label(label).unwrap();
            for (col_idx, expected) in row.iter().enumerate() {
                assert_eq!(
                    chi.values[col[col_idx]],
                    c(expected),
                    "mismatch at ({label}, column {col_idx})"
                );
            }
        }
    }

    #[test]
    fn h_table_matches_reference_entrywise() {
        let (h, t) = h_table();
        let col = octa::h_column_order(&h);
        for (label, row) in reference_h_table() {
            let chi = t.by_label(label).unwrap();
            for (col_idx, expected) in row.iter().enumerate() {
                assert_eq!(
                    chi.values[col[col_idx]],
                    c(expected),
                    "mismatch at ({label}, column {col_idx})"
                );
            }
        }
    }

    #[test]
    fn trivial_group_has_single_trivial_character() {
        let t = octa::trivial_group();
        let table = character_table(&t.group, DEFAULT_PRIME).unwrap();
        assert_eq!(table.chars.len(), 1);
        assert_eq!(table.chars[0].values, vec![Cyclotomic::one()]);
    }

    #[test]
    fn unsuitable_primes_are_rejected() {
        let g = octa::octahedral_group();
        // 89 is prime but 89 ≢ 1 (mod 24).
        assert_eq!(
            character_table(&g.group, 89).unwrap_err(),
            CharError::PrimeUnsuitable {
                prime: 89,
                exponent: 24
            }
        );
        // 13 ≡ 1 (mod 12)... but too small for |G| = 48 and wrong residue.
        assert!(character_table(&g.group, 13).is_err());
        // Composite.
        assert!(character_table(&g.group, 49).is_err());
    }

    #[test]
    fn alternative_prime_gives_identical_table() {
        let g = octa::octahedral_group();
        let mut t73 = character_table(&g.group, 73).unwrap();
        let mut t97 = character_table(&g.group, 97).unwrap();
        align_g_labels(&mut t73, &g).unwrap();
        align_g_labels(&mut t97, &g).unwrap();
        for (a, b) in t73.chars.iter().zip(&t97.chars) {
            assert_eq!(a.label, b.label);
            assert_eq!(a.values, b.values);
        }
    }

    #[test]
    fn inner_product_examples() {
        let (g, t) = g_table();
        let two_plus = t.by_label("2+").unwrap();
        let two_minus = t.by_label("2-").unwrap();
        assert_eq!(
            inner_product(&g.group, two_plus, two_plus),
            Cyclotomic::one()
        );
        assert_eq!(
            inner_product(&g.group, two_plus, two_minus),
            Cyclotomic::zero()
        );
        // Regular character: |G| at the identity, 0 elsewhere; contains each
        // irreducible with multiplicity equal to its degree.
        let id_class = g.group.class_of(0);
        let regular = Character {
            label: "reg".into(),
            values: (0..g.group.classes().len())
                .map(|i| {
                    if i == id_class {
                        Cyclotomic::from_int(48)
                    } else {
                        Cyclotomic::zero()
                    }
                })
                .collect(),
        };
        let four = t.by_label("4_0").unwrap();
        assert_eq!(
            inner_product(&g.group, &regular, four),
            Cyclotomic::from_int(4)
        );
    }

    #[test]
    fn decompose_examples() {
        let (g, t) = g_table();
        let prod = tensor(t.by_label("2+").unwrap(), t.by_label("3+").unwrap());
        let d = decompose(&g.group, &t, &prod).unwrap();
        assert_eq!(
            d.as_map(),
            BTreeMap::from([("2-".into(), 1), ("4_0".into(), 1)])
        );
        // 1+ tensor X = X for every irreducible X.
        let one_plus = t.by_label("1+").unwrap().clone();
        for chi in &t.chars {
            let p = tensor(&one_plus, chi);
            let d = decompose(&g.group, &t, &p).unwrap();
            assert_eq!(d.as_map(), BTreeMap::from([(chi.label.clone(), 1)]));
        }
        let four = t.by_label("4_0").unwrap();
        let d = decompose(&g.group, &t, &tensor(four, four)).unwrap();
        assert_eq!(
            d.as_map(),
            BTreeMap::from([
                ("1+".into(), 1),
                ("1-".into(), 1),
                ("2_0".into(), 1),
                ("3+".into(), 2),
                ("3-".into(), 2),
            ])
        );
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let (g, t) = g_table();
        // The sign character minus the trivial one has a negative multiplicity.
        let bad = Character {
            label: "bad".into(),
            values: t
                .by_label("1-")
                .unwrap()
                .values
                .iter()
                .zip(&t.by_label("1+").unwrap().values)
                .map(|(a, b)| a - b)
                .collect(),
        };
        assert!(matches!(
            decompose(&g.group, &t, &bad),
            Err(CharError::NonCharacter { .. })
        ));
    }

    #[test]
    fn functor_examples() {
        let (g, t) = g_table();
        let three_plus = t.by_label("3+").unwrap();
        let l3 = alt3(&g.group, three_plus);
        let d = decompose(&g.group, &t, &l3).unwrap();
        assert_eq!(d.as_map(), BTreeMap::from([("1-".into(), 1)]));

        let two_zero = t.by_label("2_0").unwrap();
        let s2 = sym2(&g.group, two_zero);
        assert_eq!(
            decompose(&g.group, &t, &s2).unwrap().as_map(),
            BTreeMap::from([("1+".into(), 1), ("2_0".into(), 1)])
        );
        let l2 = alt2(&g.group, two_zero);
        assert_eq!(
            decompose(&g.group, &t, &l2).unwrap().as_map(),
            BTreeMap::from([("1-".into(), 1)])
        );

        // Dual swaps the conjugate pair.
        let dual = t.by_label("2+").unwrap().dual();
        assert_eq!(dual.values, t.by_label("2-").unwrap().values);

        // Generic cube split of a 3-dimensional character: 27 = 1 + 2·8 + 10.
        let id_class = g.group.class_of(0);
        let l3d = l3.values[id_class].as_rational().unwrap();
        let m3d = mid3(&g.group, three_plus).values[id_class]
            .as_rational()
            .unwrap();
        let s3d = sym3(&g.group, three_plus).values[id_class]
            .as_rational()
            .unwrap();
        assert_eq!(
            (l3d, m3d.clone(), s3d.clone()),
            (rat_int(1), rat_int(8), rat_int(10))
        );
    }

    #[test]
    fn functor_consistency_classwise() {
        let (g, t) = g_table();
        for chi in &t.chars {
            let square = tensor(chi, chi);
            let split = add_characters(&sym2(&g.group, chi), &alt2(&g.group, chi));
            assert_eq!(square.values, split.values, "square split of {}", chi.label);
            let cube = tensor(&square, chi);
            let m = mid3(&g.group, chi);
            let split3 = add_characters(
                &add_characters(&sym3(&g.group, chi), &alt3(&g.group, chi)),
                &add_characters(&m, &m),
            );
            assert_eq!(cube.values, split3.values, "cube split of {}", chi.label);
        }
    }

    #[test]
    fn restriction_examples() {
        let (g, tg) = g_table();
        let (h, th) = h_table();
        let embedding = g.group.embedding_of(&h.group).unwrap();
        let res = |label: &str| {
            let chi = tg.by_label(label).unwrap();
            let r = restrict(&g.group, chi, &h.group, &embedding);
            decompose(&h.group, &th, &r).unwrap().as_map()
        };
        assert_eq!(
            res("4_0"),
            BTreeMap::from([("2b".into(), 1), ("2c".into(), 1)])
        );
        assert_eq!(
            res("3+"),
            BTreeMap::from([("1c".into(), 1), ("2a".into(), 1)])
        );
        assert_eq!(res("1+"), BTreeMap::from([("1a".into(), 1)]));
    }

    #[test]
    fn induction_examples() {
        let (g, tg) = g_table();
        let (h, th) = h_table();
        let embedding = g.group.embedding_of(&h.group).unwrap();
        let ind_2b = induce(&h.group, th.by_label("2b").unwrap(), &g.group, &embedding);
        assert_eq!(ind_2b.degree(&g.group), rat_int(6));
        assert_eq!(
            decompose(&g.group, &tg, &ind_2b).unwrap().as_map(),
            BTreeMap::from([("2+".into(), 1), ("4_0".into(), 1)])
        );
        let ind_1a = induce(&h.group, th.by_label("1a").unwrap(), &g.group, &embedding);
        assert_eq!(ind_1a.degree(&g.group), rat_int(3));
        let d = decompose(&g.group, &tg, &ind_1a).unwrap();
        assert_eq!(d.as_map().get("1+"), Some(&1));
        // Inducing from the group to itself is the identity.
        let self_embedding: Vec<u32> = (0..g.group.order() as u32).collect();
        let ind_triv = induce(
            &g.group,
            tg.by_label("1+").unwrap(),
            &g.group,
            &self_embedding,
        );
        assert_eq!(ind_triv.values, tg.by_label("1+").unwrap().values);
    }

    #[test]
    fn frobenius_reciprocity_on_the_full_grid() {
        let (g, tg) = g_table();
        let (h, th) = h_table();
        let embedding = g.group.embedding_of(&h.group).unwrap();
        for a in &th.chars {
            let ind = induce(&h.group, a, &g.group, &embedding);
            for b in &tg.chars {
                let res = restrict(&g.group, b, &h.group, &embedding);
                assert_eq!(
                    inner_product(&g.group, &ind, b),
                    inner_product(&h.group, a, &res),
                    "reciprocity failed at ({}, {})",
                    a.label,
                    b.label
                );
            }
        }
    }

    #[test]
    fn fs_indicator_examples() {
        let (g, t) = g_table();
        assert_eq!(
            fs_indicator(&g.group, t.by_label("1+").unwrap()).unwrap(),
            1
        );
        assert_eq!(
            fs_indicator(&g.group, t.by_label("2+").unwrap()).unwrap(),
            0
        );
        assert_eq!(
            fs_indicator(&g.group, t.by_label("4_0").unwrap()).unwrap(),
            1
        );
        // Brute-force oracle over all 48 elements, for every irreducible.
        for chi in &t.chars {
            let mut acc = Cyclotomic::zero();
            for x in 0..48u32 {
                let sq = g.group.mul(x, x);
                acc = &acc + &chi.values[g.group.class_of(sq)];
            }
            let brute = acc.scale(&rat(1, 48)).as_rational().unwrap();
            assert_eq!(
                brute,
                rat_int(fs_indicator(&g.group, chi).unwrap() as i64),
                "indicator of {}",
                chi.label
            );
        }
    }

    #[test]
    fn wedderburn_types() {
        let (g, t) = g_table();
        assert_eq!(
            real_wedderburn(&g.group, &t).unwrap(),
            WedderburnType::parse("2R + M2(R) + M2(C) + 2M3(R) + M4(R)").unwrap()
        );
        assert_eq!(
            complex_wedderburn(&g.group, &t),
            WedderburnType::parse("2C + 3M2(C) + 2M3(C) + M4(C)").unwrap()
        );
        let q8 = octa::quaternion_group();
        let tq = character_table(&q8.group, DEFAULT_PRIME).unwrap();
        assert_eq!(
            real_wedderburn(&q8.group, &tq).unwrap(),
            WedderburnType::parse("4R + H").unwrap()
        );
        let btet = octa::binary_tetrahedral_group();
        let tb = character_table(&btet.group, DEFAULT_PRIME).unwrap();
        assert_eq!(
            real_wedderburn(&btet.group, &tb).unwrap(),
            WedderburnType::parse("R + C + M3(R) + H + M2(C)").unwrap()
        );
    }

    #[test]
    fn wedderburn_display_round_trip() {
        let text = "2R + M2(R) + M2(C) + 2M3(R) + M4(R)";
        let wt = WedderburnType::parse(text).unwrap();
        assert_eq!(wt.to_string(), text);
        assert_eq!(wt.real_dimension(), 48);
    }

    #[test]
    fn column_orthogonality() {
        let (g, t) = g_table();
        let m = g.group.classes().len();
        for x in 0..m {
            for y in 0..m {
                let mut acc = Cyclotomic::zero();
                for chi in &t.chars {
                    acc = &acc + &chi.values[x].mul(&chi.values[y].conj());
                }
                let expected = if x == y {
                    let centralizer = 48 / g.group.classes()[x].size;
                    Cyclotomic::from_int(centralizer as i64)
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(acc, expected, "columns {x}, {y}");
            }
        }
    }

    #[test]
    fn decompose_recompose_round_trip_on_seeded_combinations() {
        let (g, t) = g_table();
        let mut state = 0x0c0ffee0_u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..10 {
            let entries: Vec<(String, u32)> = t
                .chars
                .iter()
                .filter_map(|chi| {
                    let m = (next() % 4) as u32;
                    (m > 0).then(|| (chi.label.clone(), m))
                })
                .collect();
            let d = Decomposition { entries };
            let chi = recompose(&g.group, &t, &d);
            assert_eq!(decompose(&g.group, &t, &chi).unwrap(), d);
        }
    }
}
