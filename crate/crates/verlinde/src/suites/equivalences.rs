use rayon::prelude::*;
use serde_json::{json, Value};
use verlinde_core::liealg::{classify_mask, normalize_rank, predicted_subalgebras, SubalgebraMask};
use verlinde_core::rootsys::{CartanType, RootDatum, Weight};
use verlinde_core::verp::VerpObject;

use super::{datum, image, object_json, paper_weight, primes_in, symmetry_orbit, SuiteParams};
use crate::cache::SharedCache;
use crate::data::{exceptional_equivalences, PaperWeight};
use crate::error::CliResult;
use crate::report::Check;

const ANCHOR: &str = "equivalences of Verlinde categories";

/// One side of a claimed equivalence: a group and the highest weight of a
/// representation whose orbit should contain the common generator.
struct Side {
    generator: Weight,
    datum: RootDatum,
}

impl Side {
    fn new(ty: CartanType, rank: usize, generator: &PaperWeight) -> CliResult<Self> {
        let d = datum(ty, rank)?;
        let generator = paper_weight(&d, generator)?;
        Ok(Side { generator, datum: d })
    }
}

struct Item {
    id: String,
    p: u64,
    sides: Vec<(CartanType, usize, PaperWeight)>,
    generator_image: u64,
}

fn items(p_max: u64) -> Vec<Item> {
    use CartanType::*;
    let mut out = Vec::new();
    // PGL_n ~ PGL_{p-n}; the odd one of n, p - n carries the generator.
    for p in primes_in(5, p_max.min(13)) {
        for n in (3..=p - 2).step_by(2) {
            let m = p - n;
            out.push(Item {
                id: format!("item2: PGL_{n} ~ PGL_{m} at p={p}"),
                p,
                sides: vec![(A, n as usize - 1, PaperWeight::fundamental(1)), (A, m as usize - 1, PaperWeight::fundamental(1))],
                generator_image: n - 1,
            });
        }
    }
    // Sp_2n ~ SO_{p-2n}; SO_3 is PGL_2 with the 3-dimensional generator.
    for p in primes_in(7, p_max.min(17)) {
        for n in 2..=(p - 3) / 2 {
            let m = (p - 2 * n - 1) / 2;
            let so_side = if m == 1 {
                (A, 1, PaperWeight(vec![(2, 1)]))
            } else {
                (B, m as usize, PaperWeight::fundamental(1))
            };
            out.push(Item {
                id: format!("item3: Sp_{} ~ SO_{} at p={p}", 2 * n, p - 2 * n),
                p,
                sides: vec![(C, n as usize, PaperWeight::fundamental(1)), so_side],
                generator_image: 2 * m,
            });
        }
    }
    out.extend(exceptional_equivalences().into_iter().map(|e| Item {
        id: e.id,
        p: e.p,
        sides: e.sides,
        generator_image: e.generator_image,
    }));
    out
}

pub(super) fn run(params: &SuiteParams, cache: &SharedCache) -> (Value, Vec<Check>) {
    let p_max = params.p_max.unwrap_or(17);
    let checks = items(p_max)
        .par_iter()
        .map(|item| check(item, cache).unwrap_or_else(|e| Check::error(item.id.clone(), ANCHOR, e)))
        .collect();
    (json!({ "items": [2, 3, 6, 7, 8], "p_max": p_max }), checks)
}

fn check(item: &Item, cache: &SharedCache) -> CliResult<Check> {
    let p = item.p;
    let sides =
        item.sides.iter().map(|(ty, r, w)| Side::new(*ty, *r, w)).collect::<CliResult<Vec<_>>>()?;
    let mut adjoint_images = Vec::new();
    let mut generators = Vec::new();
    for side in &sides {
        let (_, adj) = image(&side.datum, side.datum.highest_long_root(), p, cache)?;
        adjoint_images.push(adj);
        generators.push(find_generator(side, p, item.generator_image, cache)?);
    }
    let same_lie_object = adjoint_images.windows(2).all(|w| w[0] == w[1]);
    let all_found = generators.iter().all(Option::is_some);
    let subalgebra = lie_object_family(&adjoint_images[0], item.generator_image + 1, p);
    let ok = same_lie_object && all_found && item.generator_image.is_multiple_of(2) && subalgebra.is_ok();
    Ok(Check::new(
        item.id.clone(),
        ANCHOR,
        ok,
        json!({
            "p": p,
            "adjoint_images": adjoint_images.iter().map(object_json).collect::<Vec<_>>(),
            "generator_image": format!("L_{}", item.generator_image),
            "generators": sides.iter().zip(&generators).map(|(s, g)| json!({
                "group": s.datum.name(),
                "weight": g.as_ref().map(|w| w.to_string()),
            })).collect::<Vec<_>>(),
            "subalgebra": subalgebra.unwrap_or_else(|e| format!("error: {e}")),
        }),
    ))
}

/// An alcove weight in the symmetry orbit of the side's generator whose
/// image is `L_target`.
fn find_generator(side: &Side, p: u64, target: u64, cache: &SharedCache) -> CliResult<Option<Weight>> {
    let want = VerpObject::simple(target, p)?;
    for lambda in symmetry_orbit(&side.datum, &side.generator, p)? {
        if !side.datum.in_alcove(&lambda, p) {
            continue;
        }
        let (_, img) = image(&side.datum, &lambda, p, cache)?;
        if img == want {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// The adjoint image `⊕ L_{2i}` as a subalgebra of `sl(L_{n-1})`, with the
/// family labels it matches.
fn lie_object_family(adjoint: &VerpObject, n: u64, p: u64) -> CliResult<String> {
    let n = normalize_rank(n, p)?;
    let mut members = Vec::new();
    for (c, mult) in adjoint.support() {
        if c % 2 != 0 || mult != 1 {
            return Err(crate::error::CliError::Usage(format!("{adjoint} is not a sum of distinct L_2i")));
        }
        members.push(c / 2);
    }
    let mask = SubalgebraMask::from_members(n, p, &members)?;
    if !predicted_subalgebras(n, p)?.contains(&mask) {
        return Err(crate::error::CliError::Usage(format!("{mask} is not a listed subalgebra")));
    }
    let labels: String = classify_mask(&mask)?.iter().map(|f| f.label()).collect();
    Ok(format!("{mask} in sl(L_{}) : {labels}", n - 1))
}
