//! CSV and LaTeX renderings of a character table. The JSON form comes from
//! the core crate; these two are presentation formats.

use hecke_core::{CharTable, Partition};

/// CSV with a header row of column partitions and one row per upper
/// partition. Partition labels contain commas, so fields are quoted by the
/// writer as needed.
pub fn table_to_csv(table: &CharTable) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["lambda\\mu".to_string()];
    header.extend(table.cols().iter().map(|p| p.to_string()));
    writer.write_record(&header).expect("csv write");
    for (row_label, row) in table.rows().iter().zip(table.values()) {
        let mut record = vec![row_label.to_string()];
        record.extend(row.iter().map(|v| v.to_string()));
        writer.write_record(&record).expect("csv write");
    }
    String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv is utf-8")
}

/// Partition rendered for LaTeX math mode: a parenthesized tuple,
/// \varnothing when empty.
fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "$\\varnothing$".to_string()
    } else {
        format!("$({})$", p)
    }
}

/// A tabular with partition row/column headers and math-mode entries.
/// Nothing outside math mode is escaped.
pub fn table_to_latex(table: &CharTable) -> String {
    let cols = table.cols().len();
    let mut out = String::new();
    out.push_str(&format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(cols)));
    let header: Vec<String> = table.cols().iter().map(latex_partition).collect();
    out.push_str(&format!(" & {} \\\\\n", header.join(" & ")));
    out.push_str("\\hline\n");
    for (row_label, row) in table.rows().iter().zip(table.values()) {
        let cells: Vec<String> = row.iter().map(|v| format!("${}$", v)).collect();
        out.push_str(&format!(
            "{} & {} \\\\\n",
            latex_partition(row_label),
            cells.join(" & ")
        ));
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hecke_core::{character_table, Method};

    #[test]
    fn csv_weight_two() {
        let table = character_table(2, Method::Dual);
        let csv = table_to_csv(&table);
        assert_eq!(csv, "lambda\\mu,2,\"1,1\"\n2,q,1\n\"1,1\",-1,1\n");
    }

    #[test]
    fn latex_weight_two() {
        let table = character_table(2, Method::Dual);
        let latex = table_to_latex(&table);
        let expected = "\\begin{tabular}{c|cc}\n & $(2)$ & $(1,1)$ \\\\\n\\hline\n$(2)$ & $q$ & $1$ \\\\\n$(1,1)$ & $-1$ & $1$ \\\\\n\\end{tabular}\n";
        assert_eq!(latex, expected);
    }
}
