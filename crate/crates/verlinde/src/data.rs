//! Published tables, written in their own node labels (see `labels`).

use verlinde_core::rootsys::CartanType;

/// A representation given by its highest weight in paper labels, as
/// `(coefficient, label)` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperWeight(pub Vec<(i64, usize)>);

impl PaperWeight {
    pub fn fundamental(i: usize) -> Self {
        PaperWeight(vec![(1, i)])
    }

    pub fn coords(&self, rank: usize) -> Vec<i64> {
        let mut c = vec![0; rank];
        for &(k, i) in &self.0 {
            c[i - 1] += k;
        }
        c
    }
}

/// One row of the table of principal-`SL2` Weyl factors.
#[derive(Debug, Clone)]
pub struct ImageRow {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub column: &'static str,
    pub weight: PaperWeight,
    pub weyl_factors: Vec<u64>,
}

fn step(start: u64, by: u64, count: u64) -> Vec<u64> {
    (0..count).map(|k| start + by * k).collect()
}

/// The table of small and adjoint representations, with the classical
/// series instantiated for ranks up to `max_rank`. `B_2` is covered by the
/// `C_2` rows, whose labelling the table adopts for that case.
pub fn image_table(max_rank: usize) -> Vec<ImageRow> {
    use CartanType::*;
    let w = PaperWeight::fundamental;
    let row = |cartan_type, rank, column, weight, mut weyl_factors: Vec<u64>| {
        weyl_factors.sort_unstable();
        ImageRow { cartan_type, rank, column, weight, weyl_factors }
    };
    let mut rows = Vec::new();
    for r in 1..=max_rank as u64 {
        let ru = r as usize;
        rows.push(row(A, ru, "small", w(1), vec![r]));
        let adj = if r == 1 { PaperWeight(vec![(2, 1)]) } else { PaperWeight(vec![(1, 1), (1, ru)]) };
        rows.push(row(A, ru, "adjoint", adj, step(2, 2, r)));
        if r >= 3 {
            rows.push(row(B, ru, "small", w(1), vec![2 * r]));
            rows.push(row(B, ru, "adjoint", w(2), step(2, 4, r)));
        }
        if r >= 2 {
            rows.push(row(C, ru, "small", w(1), vec![2 * r - 1]));
            rows.push(row(C, ru, "adjoint", PaperWeight(vec![(2, 1)]), step(2, 4, r)));
        }
        if r >= 4 {
            rows.push(row(D, ru, "small", w(1), vec![0, 2 * r - 2]));
            let mut adj = step(2, 4, r - 1);
            adj.push(2 * r - 2);
            rows.push(row(D, ru, "adjoint", w(2), adj));
        }
    }
    rows.push(row(E6, 6, "small", w(1), vec![0, 8, 16]));
    rows.push(row(E6, 6, "adjoint", w(6), vec![2, 8, 10, 14, 16, 22]));
    rows.push(row(E7, 7, "small", w(1), vec![9, 17, 27]));
    rows.push(row(E7, 7, "adjoint", w(6), vec![2, 10, 14, 18, 22, 26, 34]));
    rows.push(row(E8, 8, "adjoint", w(1), vec![2, 14, 22, 26, 34, 38, 46, 58]));
    rows.push(row(F4, 4, "small", w(1), vec![8, 16]));
    rows.push(row(F4, 4, "adjoint", w(4), vec![2, 10, 14, 22]));
    rows.push(row(G2, 2, "small", w(1), vec![6]));
    rows.push(row(G2, 2, "adjoint", w(2), vec![2, 10]));
    rows
}

/// An alcove symmetry `σ = t_{pϖ} w` from the table of minuscule weights;
/// `word` lists simple reflections left to right, in paper labels.
#[derive(Debug, Clone)]
pub struct MinusculeRow {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub varpi: usize,
    pub word: Vec<usize>,
}

fn d_factor(plus: bool, i: usize, r: usize) -> Vec<usize> {
    let mut w: Vec<usize> = (i..=r - 2).collect();
    w.push(if plus { r } else { r - 1 });
    w
}

/// `s_last w^±_{r-2} w^∓_{r-3} …` down to `w_1`, starting with sign `plus`.
fn d_halfspin_word(last: usize, plus: bool, r: usize) -> Vec<usize> {
    let mut word = vec![last];
    let mut sign = plus;
    for i in (1..=r - 2).rev() {
        word.extend(d_factor(sign, i, r));
        sign = !sign;
    }
    word
}

/// Rows of the minuscule table for the given classical rank.
pub fn minuscule_rows(cartan_type: CartanType, r: usize) -> Vec<MinusculeRow> {
    use CartanType::*;
    let row = |varpi, word| MinusculeRow { cartan_type, rank: r, varpi, word };
    match cartan_type {
        A => (1..=r)
            .map(|i| {
                let word: Vec<usize> = (0..i).flat_map(|_| 1..=r).collect();
                row(i, word)
            })
            .collect(),
        B => vec![row(r, (1..=r).rev().flat_map(|i| i..=r).collect())],
        C => vec![row(1, (1..r).chain((1..=r).rev()).collect())],
        D => vec![
            row(1, (1..=r - 2).chain(std::iter::once(r)).chain((1..=r - 1).rev()).collect()),
            row(r - 1, d_halfspin_word(r - 1, true, r)),
            row(r, d_halfspin_word(r, false, r)),
        ],
        E6 => vec![
            row(1, vec![1, 2, 3, 4, 5, 6, 3, 2, 4, 3, 6, 1, 2, 3, 4, 5]),
            row(5, vec![5, 4, 3, 2, 1, 6, 3, 2, 4, 3, 6, 5, 4, 3, 2, 1]),
        ],
        E7 => vec![row(1, vec![1, 2, 3, 4, 5, 6, 7, 4, 5, 3, 4, 2, 1, 7, 3, 2, 4, 3, 5, 4, 7, 6, 5, 4, 3, 2, 1])],
        E8 | F4 | G2 => Vec::new(),
    }
}

/// Adjoint images compared in the list of equivalences:
/// `(id, [(type, rank, generator in paper labels)], p, generator image)`.
#[derive(Debug, Clone)]
pub struct EquivalenceItem {
    pub id: String,
    pub p: u64,
    pub sides: Vec<(CartanType, usize, PaperWeight)>,
    /// Index `n - 1` of the common generator image `L_{n-1}`.
    pub generator_image: u64,
}

pub fn exceptional_equivalences() -> Vec<EquivalenceItem> {
    use CartanType::*;
    vec![
        EquivalenceItem {
            id: "item6: G2 ~ PSO_12 at p=13".into(),
            p: 13,
            sides: vec![(G2, 2, PaperWeight::fundamental(1)), (D, 6, PaperWeight::fundamental(6))],
            generator_image: 6,
        },
        EquivalenceItem {
            id: "item7: F4 ~ PSO_16 at p=17".into(),
            p: 17,
            sides: vec![(F4, 4, PaperWeight::fundamental(1)), (D, 8, PaperWeight::fundamental(8))],
            generator_image: 8,
        },
        EquivalenceItem {
            id: "item8: F4 ~ G2 at p=19".into(),
            p: 19,
            // The stated F4 weight is 3w1 in LiE labels, which is 3w4 here.
            sides: vec![(F4, 4, PaperWeight(vec![(3, 4)])), (G2, 2, PaperWeight::fundamental(1))],
            generator_image: 6,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_lengths() {
        assert_eq!(minuscule_rows(CartanType::E7, 7)[0].word.len(), 27);
        assert_eq!(minuscule_rows(CartanType::A, 3)[1].word, vec![1, 2, 3, 1, 2, 3]);
        assert_eq!(minuscule_rows(CartanType::C, 3)[0].word, vec![1, 2, 3, 2, 1]);
        assert_eq!(minuscule_rows(CartanType::B, 3)[0].word, vec![3, 2, 3, 1, 2, 3]);
        let d5 = minuscule_rows(CartanType::D, 5);
        assert_eq!(d5[0].word, vec![1, 2, 3, 5, 4, 3, 2, 1]);
        assert_eq!(d5[1].word, vec![4, 3, 5, 2, 3, 4, 1, 2, 3, 5]);
        assert_eq!(d5[2].word, vec![5, 3, 4, 2, 3, 5, 1, 2, 3, 4]);
    }

    #[test]
    fn table_shape() {
        let rows = image_table(8);
        assert_eq!(rows.iter().filter(|r| r.cartan_type == CartanType::A).count(), 16);
        assert_eq!(rows.iter().filter(|r| r.cartan_type == CartanType::E8).count(), 1);
    }
}
