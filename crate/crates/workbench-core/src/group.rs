//! Finite matrix groups: closure from generators, canonical element
//! identities, Cayley tables, conjugacy classes, centralizers, subgroups,
//! normality, quotients and power maps.
//!
//! Elements are identified by canonical matrix content, so an element reached
//! through two different generator words gets a single id. Identity is id 0.
//! Conjugacy classes are sorted canonically by (element order, size, minimal
//! id); any conventional table order is applied later, in the
//! report layer.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::exact::ExactMatrix;

/// Default cap on closure size.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded the configured cap of {cap} elements")]
    ClosureBudgetExceeded { cap: usize },
    #[error("generator {index} is not invertible")]
    NotInvertible { index: usize },
    #[error("generators must be square matrices of one size")]
    ShapeMismatch,
    #[error("no generators supplied")]
    Empty,
    #[error("the given id set is not a subgroup")]
    NotASubgroup,
    #[error("the given subgroup is not normal: conjugation moves it")]
    NotNormal,
    #[error("element with key {0} is not in this group")]
    MissingElement(String),
    #[error("malformed word `{0}`")]
    BadWord(String),
}

/// One conjugacy class, canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    /// Minimal element id in the class.
    pub rep: u32,
    pub size: usize,
    /// Common order of the elements in this class.
    pub element_order: u32,
    /// Sorted member ids.
    pub members: Vec<u32>,
}

/// A finite group with a complete multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<u32>,
    gen_names: Vec<String>,
    words: Vec<String>,
    display: Vec<String>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
    matrices: Option<Vec<ExactMatrix>>,
    key_to_id: BTreeMap<String, u32>,
}

/// A surjective homomorphism onto a quotient group.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    /// Sorted ids of the kernel inside the source group.
    pub kernel: Vec<u32>,
    /// Image id in the quotient for every source id.
    pub image_of: Vec<u32>,
}

impl FiniteGroup {
    /// Closes the given invertible generator matrices under multiplication.
    ///
    /// `names` labels the generators for word displays. Fails with
    /// [`GroupError::ClosureBudgetExceeded`] when the closure passes `cap`.
    pub fn generate(
        generators: &[ExactMatrix],
        names: &[&str],
        cap: usize,
    ) -> Result<FiniteGroup, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::Empty);
        }
        let n = generators[0].rows();
        for (idx, g) in generators.iter().enumerate() {
            if !g.is_square() || g.rows() != n {
                return Err(GroupError::ShapeMismatch);
            }
            if g.det().is_zero() {
                return Err(GroupError::NotInvertible { index: idx });
            }
        }
        assert_eq!(names.len(), generators.len());

        let identity = ExactMatrix::identity(n);
        let mut elements = vec![identity.clone()];
        let mut words = vec![String::new()];
        let mut key_to_id: BTreeMap<String, u32> = BTreeMap::new();
        key_to_id.insert(identity.content_key(), 0);
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let product = elements[x as usize].mul(g);
                let key = product.content_key();
                if let std::collections::btree_map::Entry::Vacant(e) = key_to_id.entry(key) {
                    let id = elements.len() as u32;
                    if elements.len() + 1 > cap {
                        return Err(GroupError::ClosureBudgetExceeded { cap });
                    }
                    e.insert(id);
                    let mut word = words[x as usize].clone();
                    word.push_str(names[gi]);
                    words.push(word);
                    elements.push(product);
                    queue.push_back(id);
                }
            }
        }

        let order = elements.len();
        let mut cayley = vec![0u32; order * order];
        for x in 0..order {
            for y in 0..order {
                let key = elements[x].mul(&elements[y]).content_key();
                let id = *key_to_id
                    .get(&key)
                    .expect("closure is complete, product must be known");
                cayley[x * order + y] = id;
            }
        }
        let generator_ids: Vec<u32> = generators
            .iter()
            .map(|g| key_to_id[&g.content_key()])
            .collect();
        let mut group = FiniteGroup {
            order,
            cayley,
            inverse: Vec::new(),
            generators: generator_ids,
            gen_names: names.iter().map(|s| s.to_string()).collect(),
            words: words.clone(),
            display: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            matrices: Some(elements),
            key_to_id,
        };
        group.display = group
            .words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.clone()
                }
            })
            .collect();
        group.finish();
        Ok(group)
    }

    /// Builds a group directly from a complete Cayley table (used for
    /// quotients). Element 0 must be the identity.
    fn from_cayley(
        cayley: Vec<u32>,
        order: usize,
        generators: Vec<u32>,
        gen_names: Vec<String>,
    ) -> FiniteGroup {
        let mut group = FiniteGroup {
            order,
            cayley,
            inverse: Vec::new(),
            generators,
            gen_names,
            words: Vec::new(),
            display: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            matrices: None,
            key_to_id: BTreeMap::new(),
        };
        group.recompute_words();
        group.finish();
        group
    }

    fn recompute_words(&mut self) {
        let mut words: Vec<Option<String>> = vec![None; self.order];
        words[0] = Some(String::new());
        let mut queue = VecDeque::from([0u32]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in self.generators.iter().enumerate() {
                let y = self.mul(x, g);
                if words[y as usize].is_none() {
                    let mut w = words[x as usize].clone().unwrap();
                    w.push_str(&self.gen_names[gi]);
                    words[y as usize] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        self.words = words
            .into_iter()
            .map(|w| w.expect("generators generate the group"))
            .collect();
        self.display = self
            .words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.clone()
                }
            })
            .collect();
    }

    fn finish(&mut self) {
        self.inverse = (0..self.order as u32)
            .map(|x| {
                (0..self.order as u32)
                    .find(|&y| self.mul(x, y) == 0)
                    .expect("every element has an inverse")
            })
            .collect();
        self.compute_classes();
    }

    fn compute_classes(&mut self) {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order as u32 {
            if assigned[x as usize] {
                continue;
            }
            let mut members = BTreeSet::new();
            for g in 0..self.order as u32 {
                let conj = self.mul(self.mul(g, x), self.inv(g));
                members.insert(conj);
            }
            for &m in &members {
                assigned[m as usize] = true;
            }
            let members: Vec<u32> = members.into_iter().collect();
            classes.push(ConjClass {
                rep: members[0],
                size: members.len(),
                element_order: self.element_order(members[0]),
                members,
            });
        }
        classes.sort_by_key(|c| (c.element_order, c.size, c.rep));
        let mut class_of = vec![0usize; self.order];
        for (ci, class) in classes.iter().enumerate() {
            for &m in &class.members {
                class_of[m as usize] = ci;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x · y` through the Cayley table.
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.cayley[x as usize * self.order + y as usize]
    }

    pub fn inv(&self, x: u32) -> u32 {
        self.inverse[x as usize]
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize]
    }

    pub fn word(&self, x: u32) -> &str {
        &self.words[x as usize]
    }

    pub fn display(&self, x: u32) -> &str {
        &self.display[x as usize]
    }

    /// Overrides display names (the construction layer installs the
    /// conventional signed quaternion words).
    pub fn set_display_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.order);
        self.display = names;
    }

    pub fn matrices(&self) -> Option<&[ExactMatrix]> {
        self.matrices.as_deref()
    }

    pub fn matrix(&self, x: u32) -> Option<&ExactMatrix> {
        self.matrices.as_ref().map(|m| &m[x as usize])
    }

    /// Id of the element with the given matrix content, if present.
    pub fn id_of_matrix(&self, m: &ExactMatrix) -> Option<u32> {
        self.key_to_id.get(&m.content_key()).copied()
    }

    pub fn element_order(&self, x: u32) -> u32 {
        let mut n = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    /// The exponent: least common multiple of all element orders.
    pub fn exponent(&self) -> u32 {
        (0..self.order as u32)
            .map(|x| self.element_order(x))
            .fold(1, num_integer::lcm)
    }

    /// `x ↦ x^n`, defined for any integer `n`.
    pub fn power_map(&self, n: i64) -> Vec<u32> {
        (0..self.order as u32).map(|x| self.power(x, n)).collect()
    }

    pub fn power(&self, x: u32, n: i64) -> u32 {
        let o = self.element_order(x) as i64;
        let e = n.rem_euclid(o) as u32;
        let mut acc = 0u32;
        for _ in 0..e {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// All ids commuting with `x`; by orbit–stabilizer its size times the
    /// class size of `x` equals the group order.
    pub fn centralizer(&self, x: u32) -> Vec<u32> {
        (0..self.order as u32)
            .filter(|&y| self.mul(y, x) == self.mul(x, y))
            .collect()
    }

    /// Closure of the given ids under multiplication and inverse.
    pub fn subgroup_closure(&self, seed: &[u32]) -> Vec<u32> {
        let mut set: BTreeSet<u32> = BTreeSet::from([0]);
        let mut queue: VecDeque<u32> = seed.iter().copied().collect();
        for &s in seed {
            set.insert(s);
        }
        while let Some(x) = queue.pop_front() {
            let candidates: Vec<u32> = set.iter().map(|&y| self.mul(x, y)).collect();
            for c in candidates.into_iter().chain([self.inv(x)]) {
                if set.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        // Saturate: pairwise products until stable.
        loop {
            let snapshot: Vec<u32> = set.iter().copied().collect();
            let before = set.len();
            for &a in &snapshot {
                for &b in &snapshot {
                    set.insert(self.mul(a, b));
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, ids: &[u32]) -> bool {
        let set: BTreeSet<u32> = ids.iter().copied().collect();
        set.contains(&0)
            && set.iter().all(|&a| {
                set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.mul(a, b)))
            })
    }

    pub fn is_normal(&self, ids: &[u32]) -> bool {
        let set: BTreeSet<u32> = ids.iter().copied().collect();
        (0..self.order as u32).all(|g| {
            set.iter()
                .all(|&k| set.contains(&self.mul(self.mul(g, k), self.inv(g))))
        })
    }

    /// Quotient by a normal subgroup; returns the quotient group and the
    /// verified projection map.
    pub fn quotient(&self, kernel: &[u32]) -> Result<(FiniteGroup, QuotientMap), GroupError> {
        if !self.is_subgroup(kernel) {
            return Err(GroupError::NotASubgroup);
        }
        if !self.is_normal(kernel) {
            return Err(GroupError::NotNormal);
        }
        let kset: BTreeSet<u32> = kernel.iter().copied().collect();
        // Identity coset gets id 0 because scanning starts at element 0.
        let mut coset_of: Vec<Option<u32>> = vec![None; self.order];
        let mut coset_reps: Vec<u32> = Vec::new();
        for x in 0..self.order as u32 {
            if coset_of[x as usize].is_some() {
                continue;
            }
            let id = coset_reps.len() as u32;
            for &k in &kset {
                coset_of[self.mul(x, k) as usize] = Some(id);
            }
            coset_reps.push(x);
        }
        let image_of: Vec<u32> = (0..self.order)
            .map(|x| coset_of[x].expect("every element lies in a coset"))
            .collect();
        let q_order = coset_reps.len();
        let mut cayley = vec![0u32; q_order * q_order];
        for (a, &ra) in coset_reps.iter().enumerate() {
            for (b, &rb) in coset_reps.iter().enumerate() {
                cayley[a * q_order + b] = image_of[self.mul(ra, rb) as usize];
            }
        }
        let mut q_gens: Vec<u32> = Vec::new();
        let mut q_names: Vec<String> = Vec::new();
        for (gi, &g) in self.generators.iter().enumerate() {
            let img = image_of[g as usize];
            if img != 0 && !q_gens.contains(&img) {
                q_gens.push(img);
                q_names.push(self.gen_names[gi].clone());
            }
        }
        if q_gens.is_empty() && q_order > 1 {
            return Err(GroupError::NotASubgroup);
        }
        if q_order == 1 {
            let group = FiniteGroup::from_cayley(cayley, 1, vec![], vec![]);
            let map = QuotientMap {
                kernel: kernel.to_vec(),
                image_of,
            };
            return Ok((group, map));
        }
        let group = FiniteGroup::from_cayley(cayley, q_order, q_gens, q_names);
        let map = QuotientMap {
            kernel: kernel.to_vec(),
            image_of,
        };
        // The projection is a homomorphism by construction; verify anyway.
        debug_assert!(
            (0..self.order as u32).all(|a| (0..self.order as u32).all(|b| {
                map.image_of[self.mul(a, b) as usize]
                    == group.mul(map.image_of[a as usize], map.image_of[b as usize])
            }))
        );
        Ok((group, map))
    }

    /// Ids of a subgroup's elements inside this group, matched by matrix
    /// content. Fails when the candidate is not realized by submatrices.
    pub fn embedding_of(&self, sub: &FiniteGroup) -> Result<Vec<u32>, GroupError> {
        let mats = sub
            .matrices()
            .ok_or_else(|| GroupError::MissingElement("subgroup has no matrices".into()))?;
        mats.iter()
            .map(|m| {
                self.id_of_matrix(m)
                    .ok_or_else(|| GroupError::MissingElement(m.content_key()))
            })
            .collect()
    }

    /// Evaluates a word like `wdw`, `(jd)3`, `-di`, `i2` over named elements.
    pub fn eval_word(&self, names: &BTreeMap<String, u32>, word: &str) -> Result<u32, GroupError> {
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0usize;
        let v = self.parse_word(&chars, &mut pos, names, word)?;
        if pos != chars.len() {
            return Err(GroupError::BadWord(word.to_string()));
        }
        Ok(v)
    }

    fn parse_word(
        &self,
        chars: &[char],
        pos: &mut usize,
        names: &BTreeMap<String, u32>,
        original: &str,
    ) -> Result<u32, GroupError> {
        let mut acc = 0u32; // identity
        let mut negate = false;
        if *pos < chars.len() && chars[*pos] == '-' {
            negate = true;
            *pos += 1;
        }
        let mut any = false;
        while *pos < chars.len() && chars[*pos] != ')' {
            let base = if chars[*pos] == '(' {
                *pos += 1;
                let inner = self.parse_word(chars, pos, names, original)?;
                if *pos >= chars.len() || chars[*pos] != ')' {
                    return Err(GroupError::BadWord(original.to_string()));
                }
                *pos += 1;
                inner
            } else {
                let name = chars[*pos].to_string();
                *pos += 1;
                if name == "1" {
                    0
                } else {
                    *names
                        .get(&name)
                        .ok_or_else(|| GroupError::BadWord(original.to_string()))?
                }
            };
            let mut exp = 0u64;
            let mut has_exp = false;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                has_exp = true;
                exp = exp * 10 + chars[*pos].to_digit(10).unwrap() as u64;
                *pos += 1;
            }
            let exp = if has_exp { exp } else { 1 };
            for _ in 0..exp {
                acc = self.mul(acc, base);
            }
            any = true;
        }
        if !any && !negate {
            return Err(GroupError::BadWord(original.to_string()));
        }
        if negate {
            let minus_one = *names
                .get("-1")
                .ok_or_else(|| GroupError::BadWord(original.to_string()))?;
            acc = self.mul(minus_one, acc);
        }
        Ok(acc)
    }

    /// Checks `lhs = rhs` as words over named elements.
    pub fn check_relation(
        &self,
        names: &BTreeMap<String, u32>,
        lhs: &str,
        rhs: &str,
    ) -> Result<bool, GroupError> {
        let l = self.eval_word(names, lhs)?;
        let r = if rhs == "1" {
            0
        } else {
            self.eval_word(names, rhs)?
        };
        Ok(l == r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[&str]]) -> ExactMatrix {
        ExactMatrix::parse_rows(rows).unwrap()
    }

    fn cyclic_4() -> FiniteGroup {
        // <i> as a 1x1 matrix group of order 4.
        let g = mat(&[&["i"]]);
        FiniteGroup::generate(&[g], &["i"], 100).unwrap()
    }

    #[test]
    fn identity_alone_gives_trivial_group() {
        let g = FiniteGroup::generate(&[ExactMatrix::identity(3)], &["e"], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classes().len(), 1);
        assert_eq!(g.classes()[0].size, 1);
    }

    #[test]
    fn cyclic_group_of_order_four() {
        let g = cyclic_4();
        assert_eq!(g.order(), 4);
        assert_eq!(g.classes().len(), 4);
        assert_eq!(g.element_order(g.generators()[0]), 4);
        assert_eq!(g.exponent(), 4);
    }

    #[test]
    fn closure_budget_is_enforced() {
        let g = mat(&[&["i"]]);
        assert_eq!(
            FiniteGroup::generate(&[g], &["i"], 3).unwrap_err(),
            GroupError::ClosureBudgetExceeded { cap: 3 },
        );
    }

    #[test]
    fn singular_generator_rejected() {
        let z = ExactMatrix::zero(2, 2);
        assert_eq!(
            FiniteGroup::generate(&[z], &["z"], 10).unwrap_err(),
            GroupError::NotInvertible { index: 0 },
        );
    }

    #[test]
    fn cayley_is_associative_and_latin() {
        let g = cyclic_4();
        let n = g.order() as u32;
        for a in 0..n {
            let mut seen = std::collections::BTreeSet::new();
            for b in 0..n {
                assert!(seen.insert(g.mul(a, b)));
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn power_map_basics() {
        let g = cyclic_4();
        assert_eq!(g.power_map(1), vec![0, 1, 2, 3]);
        let squared = g.power_map(2);
        let x = g.generators()[0];
        assert_eq!(squared[x as usize], g.mul(x, x));
        // Negative powers go through inverses.
        assert_eq!(g.power(x, -1), g.inv(x));
    }

    #[test]
    fn quotient_of_cyclic_four_by_squares() {
        let g = cyclic_4();
        let x = g.generators()[0];
        let x2 = g.mul(x, x);
        let kernel = vec![0, x2];
        let (q, map) = g.quotient(&kernel).unwrap();
        assert_eq!(q.order(), 2);
        for a in 0..4u32 {
            for b in 0..4u32 {
                assert_eq!(
                    map.image_of[g.mul(a, b) as usize],
                    q.mul(map.image_of[a as usize], map.image_of[b as usize])
                );
            }
        }
        assert_eq!(g.order(), kernel.len() * q.order());
    }

    #[test]
    fn quotient_rejects_non_normal_and_non_subgroup() {
        let g = cyclic_4();
        let x = g.generators()[0];
        assert_eq!(g.quotient(&[0, x]).unwrap_err(), GroupError::NotASubgroup);
    }

    #[test]
    fn word_evaluation() {
        let g = cyclic_4();
        let names = BTreeMap::from([
            ("i".to_string(), g.generators()[0]),
            ("-1".to_string(), g.power(g.generators()[0], 2)),
        ]);
        assert!(g.check_relation(&names, "i4", "1").unwrap());
        assert!(g.check_relation(&names, "i2", "-1").unwrap());
        assert!(g.check_relation(&names, "(i)2", "-1").unwrap());
        assert!(g.check_relation(&names, "-i", "i3").unwrap());
        assert!(!g.check_relation(&names, "i", "-1").unwrap());
        assert!(g.eval_word(&names, "q").is_err());
    }

    #[test]
    fn conjugation_preserves_classes_exhaustively() {
        let g = cyclic_4();
        for x in 0..g.order() as u32 {
            for h in 0..g.order() as u32 {
                let conj = g.mul(g.mul(h, x), g.inv(h));
                assert_eq!(g.class_of(conj), g.class_of(x));
            }
        }
    }
}
