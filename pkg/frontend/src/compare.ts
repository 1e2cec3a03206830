import { ApiClient, ApiError } from "./api.js";
import { trimmed } from "./scale.js";
import type { PrioritiesResponse, SessionView } from "./types.js";

// Side-by-side table of the two solvers for one expert. Rankings are
// taken straight from the response; a row is flagged when the two
// methods rank that item differently.

export class MethodComparison {
  private expert = 0;
  private data: PrioritiesResponse | null = null;
  private error: string | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private session: SessionView,
  ) {
    this.render();
    void this.refresh();
  }

  update(session: SessionView): void {
    this.session = session;
    if (this.expert >= session.experts.length) {
      this.expert = 0;
    }
    void this.refresh();
  }

  setExpert(index: number): void {
    this.expert = index;
    void this.refresh();
  }

  private async refresh(): Promise<void> {
    try {
      this.data = await this.api.priorities(this.session.id, "both");
      this.error = null;
    } catch (err) {
      this.data = null;
      this.error = err instanceof ApiError ? err.message : String(err);
    }
    this.render();
  }

  private render(): void {
    this.root.innerHTML = "";

    const picker = document.createElement("select");
    picker.className = "expert-picker";
    this.session.experts.forEach((e, k) => {
      const option = document.createElement("option");
      option.value = String(k);
      option.textContent = e.name;
      option.selected = k === this.expert;
      picker.appendChild(option);
    });
    picker.addEventListener("change", () => this.setExpert(Number(picker.value)));
    if (this.session.experts.length > 1) {
      this.root.appendChild(picker);
    }

    if (this.error) {
      const banner = document.createElement("div");
      banner.className = "error-banner";
      banner.textContent = this.error;
      this.root.appendChild(banner);
      return;
    }
    if (!this.data) {
      return;
    }

    const expert = this.data.experts[this.expert];
    if (!expert || !expert.w || !expert.ranking || !expert.consistency) {
      return;
    }
    const se = expert.se;
    if (se && !se.converged) {
      const warning = document.createElement("div");
      warning.className = "warning-banner";
      warning.dataset.part = "se-warning";
      warning.textContent =
        "eigenvector iteration did not converge; its column is a best effort";
      this.root.appendChild(warning);
    }

    const table = document.createElement("table");
    table.className = "compare-table";
    const head = table.insertRow();
    for (const text of ["item", "geometric-mean weight", "rank", "eigenvector weight", "rank"]) {
      const th = document.createElement("th");
      th.textContent = text;
      head.appendChild(th);
    }

    const labels = this.data.labels;
    const rankOf = (ranking: number[]): number[] => {
      // ranking lists item indexes best-first; invert to rank-per-item
      const out = new Array<number>(ranking.length);
      ranking.forEach((item, pos) => {
        out[item] = pos + 1;
      });
      return out;
    };
    const llsRank = rankOf(expert.ranking);
    const seRank = se ? rankOf(se.ranking) : null;

    labels.forEach((label, k) => {
      const row = table.insertRow();
      row.dataset.item = String(k);
      const cells = [
        label,
        trimmed(expert.w![k], 4),
        String(llsRank[k]),
        se ? trimmed(se.w[k], 4) : "–",
        seRank ? String(seRank[k]) : "–",
      ];
      for (const text of cells) {
        const cell = row.insertCell();
        cell.textContent = text;
      }
      if (seRank && seRank[k] !== llsRank[k]) {
        row.classList.add("rank-disagreement");
      }
    });
    this.root.appendChild(table);

    const summary = document.createElement("p");
    summary.className = "compare-summary";
    const bits = [`inconsistency spread σ² = ${fmt(expert.consistency.sigma2)}`];
    if (se) {
      bits.push(`eigenvalue index μ = ${fmt(se.mu)} (λ_max ${trimmed(se.lambda_max, 6)})`);
    }
    summary.textContent = bits.join("; ");
    this.root.appendChild(summary);
  }
}

function fmt(value: number | null): string {
  if (value === null) {
    return "undefined at this size";
  }
  if (value === 0) {
    return "0";
  }
  return value >= 0.001 ? trimmed(value, 4) : value.toExponential(2);
}
