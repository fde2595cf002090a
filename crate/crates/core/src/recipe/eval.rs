use std::collections::HashMap;
use std::path::Path;

use crate::codes::{bch_code, cyclic_code, CodeError, DistanceInfo, LinearCode};
use crate::galois::{Field, Poly};
use crate::matrix::Mat;
use crate::tables::BoundsTable;

use super::{Call, Recipe, RecipeError, Statement};

/// The result of a recipe together with the statements whose distance
/// knowledge was taken from a bounds table rather than derived.
#[derive(Clone, Debug)]
pub struct Evaluated {
    pub code: LinearCode,
    pub table_sourced: Vec<String>,
}

/// Evaluates every statement in order and returns the last one's code.
/// `load` paths are resolved against `dir`.
pub fn eval_recipe(recipe: &Recipe, dir: &Path) -> Result<LinearCode, RecipeError> {
    eval_recipe_with(recipe, dir, None).map(|e| e.code)
}

/// Like [`eval_recipe`], but ingredient codes (statements other than the
/// result that do not depend on a Plotkin sum) whose parameters appear in
/// `table` take the table's bounds as trusted distance knowledge.
pub fn eval_recipe_with(
    recipe: &Recipe,
    dir: &Path,
    table: Option<&BoundsTable>,
) -> Result<Evaluated, RecipeError> {
    let mut codes: HashMap<&str, (LinearCode, bool)> = HashMap::new();
    let mut table_sourced = Vec::new();
    let last = recipe.statements.len() - 1;
    for (i, stmt) in recipe.statements.iter().enumerate() {
        let fail = |source: CodeError| RecipeError::Code { name: stmt.name.text.clone(), at: stmt.name.at, source };
        let get = |name: &super::Name| codes.get(name.text.as_str()).expect("operands are checked by the parser");
        let after_sum = stmt.call.operands().iter().any(|op| get(op).1) || matches!(stmt.call, Call::Plotkin(..));
        let mut code = match &stmt.call {
            Call::Bch { q, n, delta, b } => {
                let f = Field::gf(*q).map_err(|e| fail(e.into()))?;
                bch_code(&f, *n, *delta, b.unwrap_or(1)).map_err(fail)?
            }
            Call::Cyclic { q, n, poly } => {
                let f = Field::gf(*q).map_err(|e| fail(e.into()))?;
                let g = Poly::parse(&f, poly).map_err(|e| fail(e.into()))?;
                cyclic_code(&f, *n, &g).map_err(fail)?
            }
            Call::Extend(a) => get(a).0.extend(),
            Call::Shorten(a, s) => get(a).0.shorten(&s.positions()).map_err(fail)?,
            Call::Puncture(a, s) => get(a).0.puncture(&s.positions()).map_err(fail)?,
            Call::Plotkin(a, b) => LinearCode::plotkin_sum(&get(a).0, &get(b).0).map_err(fail)?,
            Call::Dual(a) => get(a).0.dual(),
            Call::Load(path) => load(stmt, &dir.join(path))?,
        };
        if let Some(t) = table.filter(|_| i != last && !after_sum) {
            if let Some(b) = t.query(code.field().order(), code.n(), code.k()) {
                let hi = b.d_high.unwrap_or(code.n() - code.k() + 1);
                code = code.clone().with_distance(code.distance().refine(DistanceInfo::between(b.d_low, hi)));
                table_sourced.push(stmt.name.text.clone());
            }
        }
        codes.insert(&stmt.name.text, (code, after_sum));
    }
    let (code, _) = codes.remove(recipe.terminal().name.text.as_str()).expect("terminal was evaluated");
    Ok(Evaluated { code, table_sourced })
}

fn load(stmt: &Statement, path: &Path) -> Result<LinearCode, RecipeError> {
    let err = |message: String| RecipeError::Load { name: stmt.name.text.clone(), at: stmt.name.at, message };
    let text = std::fs::read_to_string(path).map_err(|e| err(format!("{}: {e}", path.display())))?;
    let m = Mat::parse(&text).map_err(|e| err(format!("{}: {e}", path.display())))?;
    LinearCode::from_generator(m)
        .map_err(|source| RecipeError::Code { name: stmt.name.text.clone(), at: stmt.name.at, source })
}
