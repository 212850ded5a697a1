use std::collections::BTreeMap;

use tatami::classify::classify_table_with_budget;
use tatami::gf::invert_transform_terms;
use tatami::gf::spec_file::parse_gf_specs;
use tatami::table_io::{read_table, write_aligned, write_csv, write_json};
use tatami::verify::{check_specs, DataSource};
use tatami::{
    classify_row, cross_validate, transfer_count, ClassMode, Congruence, Enumerator, Error,
    FloorSpec, Result, Tiling,
};

use crate::{FloorArgs, Format, GfcheckArgs, OracleArgs, Outcome, TableArgs};

fn read(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn floor_of(a: &FloorArgs) -> Result<FloorSpec> {
    FloorSpec::new(
        a.instance.width as usize,
        a.length as usize,
        a.instance.tile,
    )
}

pub fn table(a: TableArgs) -> Result<Outcome> {
    let congruence = if a.incongruent {
        Congruence::Incongruent
    } else {
        Congruence::Full
    };
    let mut table = classify_table_with_budget(
        a.instance.width as usize,
        a.instance.tile,
        a.length.clone(),
        a.classify.into(),
        congruence,
        Some(a.instance.max_nodes),
    )?;
    if let Some(k) = a.columns {
        for row in table.rows.values_mut() {
            row.pad_to(k);
        }
    }
    let text = match a.format {
        Format::Aligned => {
            let mut t = write_aligned(&table);
            if table.rows.values().any(|r| r.is_representative_dependent()) {
                t.push_str("# rows marked * depend on the choice of orbit representative\n");
            }
            t
        }
        Format::Csv => write_csv(&table, a.length),
        Format::Json => write_json(&table, a.length),
    };
    print!("{text}");
    Ok(Outcome::Ok)
}

pub fn gfcheck(a: GfcheckArgs) -> Result<Outcome> {
    let specs = parse_gf_specs(&read(&a.spec)?)?;
    let source = if a.data == "computed" {
        DataSource::Computed {
            max_nodes: Some(a.max_nodes),
        }
    } else {
        DataSource::Rows(read_table(&read(a.data.as_ref())?)?)
    };
    let reports = check_specs(&specs, &source)?;
    let mut all = true;
    for r in &reports {
        println!("{r}");
        all &= r.is_match();
    }
    let matched = reports.iter().filter(|r| r.is_match()).count();
    println!("{matched}/{} generating functions match", reports.len());
    Ok(if all { Outcome::Ok } else { Outcome::Mismatch })
}

pub fn invert(a: FloorArgs) -> Result<Outcome> {
    let floor = floor_of(&a)?;
    let (m, n) = (floor.width(), floor.length());
    let mut slide_free = BTreeMap::new();
    for w in 1..=m {
        let f = FloorSpec::new(w, n, floor.tile())?;
        let row = classify_row(
            f,
            ClassMode::SlideLines,
            Congruence::Full,
            Some(a.instance.max_nodes),
        )?;
        slide_free.insert((n, w), row.get(0));
    }
    let terms = invert_transform_terms(&slide_free, m, n, None)?;
    let mut total: tatami::Count = 0;
    for t in &terms {
        let parts: Vec<String> = t.parts.iter().map(usize::to_string).collect();
        let factors: Vec<String> = t
            .parts
            .iter()
            .map(|w| slide_free[&(n, *w)].to_string())
            .collect();
        println!(
            "{{{}}}: {} x {} = {}",
            parts.join(","),
            t.multinomial,
            factors.join(" x "),
            t.contribution
        );
        total = total
            .checked_add(t.contribution)
            .ok_or(Error::Overflow("evaluating the invert transform"))?;
    }
    let direct = Enumerator::new(floor)
        .with_max_nodes(Some(a.instance.max_nodes))
        .run(&mut |_: &Tiling| {})?;
    println!("T({n},{m}) = {total}");
    println!("enumerated: {direct}");
    Ok(if total == direct {
        Outcome::Ok
    } else {
        Outcome::Mismatch
    })
}

pub fn oracle(a: OracleArgs) -> Result<Outcome> {
    let floor = floor_of(&a.floor)?;
    if !a.validate {
        println!("{}", transfer_count(floor)?);
        return Ok(Outcome::Ok);
    }
    let budget = a.floor.instance.max_nodes;
    match cross_validate(floor, Some(budget)) {
        Ok(v) => {
            println!("{}", v.oracle);
            if v.is_match() {
                println!("enumerated: {} (match)", v.enumerated);
                Ok(Outcome::Ok)
            } else {
                println!("enumerated: {} (MISMATCH)", v.enumerated);
                Ok(Outcome::Mismatch)
            }
        }
        Err(Error::BudgetExceeded { limit }) => {
            println!("{}", transfer_count(floor)?);
            println!("validation skipped: enumeration exceeds the budget of {limit} search nodes");
            Ok(Outcome::Ok)
        }
        Err(e) => Err(e),
    }
}
