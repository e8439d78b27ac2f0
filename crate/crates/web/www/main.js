import init, { tableaux, supermatrix, schur_weyl } from "./pkg/superschur_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number.parseInt($(id).value, 10);

function fail(out, e) {
  out.innerHTML = "";
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = String(e.message ?? e);
  out.append(p);
}

function cell(row, text, cls) {
  const td = document.createElement("td");
  td.textContent = text;
  if (cls) td.className = cls;
  row.append(td);
}

function showTableaux() {
  const out = $("t-out");
  try {
    const data = JSON.parse(tableaux(num("t-m"), num("t-n"), num("t-r")));
    const table = document.createElement("table");
    table.innerHTML = "<tr><th>shape</th><th>SYT</th><th>SSYT</th><th>fillings</th></tr>";
    for (const row of data.rows) {
      const tr = document.createElement("tr");
      cell(tr, "(" + row.shape.join(",") + ")");
      cell(tr, row.syt);
      cell(tr, row.ssyt);
      const more = row.ssyt > row.fillings.length ? "\n…" : "";
      cell(tr, row.fillings.join("\n\n") + more, "filling");
      table.append(tr);
    }
    const sum = document.createElement("p");
    sum.textContent = `Σ SYT·SSYT = ${data.total}, (m+n)^r = ${data.expected}`;
    out.replaceChildren(table, sum);
  } catch (e) {
    fail(out, e);
  }
}

function showBerezinian() {
  const out = $("b-out");
  try {
    const data = JSON.parse(supermatrix($("b-in").value));
    const p = document.createElement("p");
    p.textContent = `Ber = ${data.berezinian_text}    str = ${data.supertrace_text}    reconstruction ${data.verified ? "verified" : "FAILED"}`;
    const pre = document.createElement("pre");
    pre.textContent = ["upper", "blockdiag", "lower"]
      .map((k) => k + ": " + JSON.stringify(data[k].entries))
      .join("\n");
    out.replaceChildren(p, pre);
  } catch (e) {
    fail(out, e);
  }
}

function showSchurWeyl() {
  const out = $("s-out");
  out.textContent = "computing…";
  setTimeout(() => {
    try {
      const { report, passed } = JSON.parse(schur_weyl(num("s-m"), num("s-n"), num("s-r")));
      const p = document.createElement("p");
      p.className = passed ? "pass" : "error";
      p.textContent =
        `dim ⟨τ⟩ = ${report.dim_tau} (expected ${report.expected_dim_tau}), ` +
        `dim ⟨θ⟩ = ${report.dim_theta} (expected ${report.expected_dim_theta}), ` +
        `each the centralizer of the other: ${report.double_centralizer}`;
      out.replaceChildren(p);
    } catch (e) {
      fail(out, e);
    }
  }, 0);
}

await init();
$("t-go").addEventListener("click", showTableaux);
$("b-go").addEventListener("click", showBerezinian);
$("s-go").addEventListener("click", showSchurWeyl);
showTableaux();
