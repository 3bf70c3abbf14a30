use std::io::Write;

use serde::Serialize;
use szeta::families::IdentityReport;
use szeta::numkernel::{Complex, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// One output row. `status` is "ok" for values and "pass"/"fail" for checks.
#[derive(Clone, Debug, Serialize)]
pub struct OutputRecord {
    pub quantity: String,
    pub parameters: String,
    pub n: Option<i64>,
    pub k: Option<i64>,
    pub value: String,
    pub error_bound: String,
    pub provenance: &'static str,
    pub status: &'static str,
}

pub const CLOSED_FORM: &str = "closed-form";
pub const ORACLE: &str = "oracle";
pub const IDENTITY: &str = "identity-check";

pub enum Bound {
    Exact,
    Abs(f64),
}

impl Bound {
    fn render(&self) -> String {
        match self {
            Bound::Exact => "exact".into(),
            Bound::Abs(b) => format!("{b:.3e}"),
        }
    }
}

pub struct Emitter {
    pub digits: usize,
    pub records: Vec<OutputRecord>,
}

impl Emitter {
    pub fn new(digits: u32) -> Emitter {
        Emitter { digits: digits as usize, records: Vec::new() }
    }

    pub fn value(&mut self, quantity: &str, parameters: &str, n: Option<i64>, k: Option<i64>, v: &Real, b: Bound, provenance: &'static str) {
        self.records.push(OutputRecord {
            quantity: quantity.into(),
            parameters: parameters.into(),
            n,
            k,
            value: v.to_decimal(self.digits),
            error_bound: b.render(),
            provenance,
            status: "ok",
        });
    }

    pub fn complex(&mut self, quantity: &str, parameters: &str, n: Option<i64>, v: &Complex, b: Bound, provenance: &'static str) {
        let value = if v.im.is_zero() {
            v.re.to_decimal(self.digits)
        } else {
            let (re, im) = v.to_decimal(self.digits);
            let im = if im.starts_with('-') { im } else { format!("+{im}") };
            format!("{re}{im}i")
        };
        self.records.push(OutputRecord {
            quantity: quantity.into(),
            parameters: parameters.into(),
            n,
            k: None,
            value,
            error_bound: b.render(),
            provenance,
            status: "ok",
        });
    }

    /// A check: the value column carries the defect, the bound its tolerance.
    pub fn report(&mut self, r: &IdentityReport, n: Option<i64>, k: Option<i64>) {
        let mut parameters = r.parameters.clone();
        for note in &r.notes {
            parameters.push_str(&format!("; {note}"));
        }
        self.records.push(OutputRecord {
            quantity: format!("verify.{}", r.identity),
            parameters,
            n,
            k,
            value: if r.exact { "0".into() } else { format!("{:.3e}", r.max_abs_defect) },
            error_bound: if r.exact { "exact".into() } else { format!("{:.3e}", r.tolerance) },
            provenance: IDENTITY,
            status: if r.pass { "pass" } else { "fail" },
        });
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.status != "fail")
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            // an array with one record per line
            Format::Json => {
                out.write_all(b"[")?;
                for (i, r) in self.records.iter().enumerate() {
                    out.write_all(if i == 0 { b"\n" } else { b",\n" })?;
                    serde_json::to_writer(&mut *out, r)?;
                }
                out.write_all(b"\n]\n")?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                if self.records.is_empty() {
                    w.write_record(["quantity", "parameters", "n", "k", "value", "error_bound", "provenance", "status"])?;
                }
                for r in &self.records {
                    w.serialize(r)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }
}
