import { ApiClient, ApiError } from "./api.js";
import { MethodComparison } from "./compare.js";
import { GroupDashboard } from "./dashboard.js";
import { JudgmentGrid } from "./grid.js";
import type { SessionView } from "./types.js";

type TabName = "judge" | "group" | "compare";

/**
 * Top-level shell: a session form, then three tabs over one session.
 * The session object held here is whatever the server last said; every
 * component that changes it reports back through onSession so the
 * others can re-render from the same state.
 */
export class App {
  private api: ApiClient;
  private session: SessionView | null = null;
  private tab: TabName = "judge";
  private activeExpert = 0;
  private dashboard: GroupDashboard | null = null;
  private comparison: MethodComparison | null = null;

  constructor(private readonly root: HTMLElement, base = "") {
    this.api = new ApiClient(base);
    this.render();
  }

  setBase(base: string): void {
    this.api = new ApiClient(base);
  }

  private render(): void {
    this.root.innerHTML = "";
    if (!this.session) {
      this.renderSetup();
      return;
    }
    this.renderTabs();
    this.renderBody();
  }

  private renderSetup(): void {
    const form = document.createElement("form");
    form.className = "setup-form";
    form.innerHTML = `
      <h2>new comparison session</h2>
      <label>items to rank, comma separated
        <input name="labels" placeholder="price, battery, weight" required>
      </label>
      <label>experts, comma separated (blank for a single judge)
        <input name="experts" placeholder="amy, ben">
      </label>
      <label class="inline">
        <input type="checkbox" name="free"> allow ratios outside the 1/9..9 scale
      </label>
      <button type="submit">start</button>
      <p class="form-error" data-part="form-error"></p>
      <h2>or pick up an existing one</h2>
      <label>session id
        <input name="session-id" placeholder="s-...">
      </label>
      <button type="button" data-part="load">load</button>
    `;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.createSession(form);
    });
    form.querySelector('[data-part="load"]')?.addEventListener("click", () => {
      const id = (form.elements.namedItem("session-id") as HTMLInputElement).value.trim();
      if (id) {
        void this.loadSession(id, form);
      }
    });
    this.root.appendChild(form);
  }

  private async createSession(form: HTMLFormElement): Promise<void> {
    const labelField = form.elements.namedItem("labels") as HTMLInputElement;
    const expertField = form.elements.namedItem("experts") as HTMLInputElement;
    const freeField = form.elements.namedItem("free") as HTMLInputElement;
    const labels = labelField.value
      .split(",")
      .map((s) => s.trim())
      .filter(Boolean);
    const names = expertField.value
      .split(",")
      .map((s) => s.trim())
      .filter(Boolean);
    // Equal say to start with; the group tab is where that gets argued.
    const experts = names.map((name) => ({ name, alpha: 1 / names.length }));
    const body: Parameters<ApiClient["createSession"]>[0] = { labels };
    if (experts.length > 0) {
      body.experts = experts;
    }
    if (freeField.checked) {
      body.settings = { scale_mode: "free_positive" };
    }
    try {
      this.session = await this.api.createSession(body);
      this.tab = "judge";
      this.activeExpert = 0;
      this.render();
    } catch (error) {
      this.formError(form, error);
    }
  }

  private async loadSession(id: string, form: HTMLFormElement): Promise<void> {
    try {
      this.session = await this.api.getSession(id);
      this.tab = "judge";
      this.activeExpert = 0;
      this.render();
    } catch (error) {
      this.formError(form, error);
    }
  }

  private formError(form: HTMLFormElement, error: unknown): void {
    const note = form.querySelector<HTMLElement>('[data-part="form-error"]');
    if (note) {
      note.textContent = error instanceof ApiError ? error.message : String(error);
    }
  }

  private renderTabs(): void {
    const bar = document.createElement("nav");
    bar.className = "tab-bar";
    const tabs: [TabName, string][] = [
      ["judge", "judge pairs"],
      ["group", "group view"],
      ["compare", "method check"],
    ];
    for (const [name, title] of tabs) {
      const button = document.createElement("button");
      button.textContent = title;
      button.dataset.tab = name;
      button.className = name === this.tab ? "tab active" : "tab";
      button.addEventListener("click", () => {
        this.tab = name;
        this.render();
      });
      bar.appendChild(button);
    }
    const id = document.createElement("span");
    id.className = "session-id";
    id.textContent = this.session ? this.session.id : "";
    bar.appendChild(id);
    this.root.appendChild(bar);
  }

  private renderBody(): void {
    const session = this.session!;
    const body = document.createElement("main");
    body.dataset.part = "body";
    this.root.appendChild(body);

    const onSession = (s: SessionView) => {
      this.session = s;
      this.dashboard?.update(s);
      this.comparison?.update(s);
    };

    if (this.tab === "judge") {
      if (session.experts.length > 1) {
        const picker = document.createElement("select");
        picker.className = "expert-picker";
        session.experts.forEach((e, k) => {
          const option = document.createElement("option");
          option.value = String(k);
          option.textContent = e.name;
          option.selected = k === this.activeExpert;
          picker.appendChild(option);
        });
        picker.addEventListener("change", () => {
          this.activeExpert = Number(picker.value);
          this.render();
        });
        body.appendChild(picker);
      }
      const host = document.createElement("div");
      host.dataset.part = "grid";
      body.appendChild(host);
      new JudgmentGrid(host, this.api, session, this.activeExpert, onSession);
    } else if (this.tab === "group") {
      const host = document.createElement("div");
      host.dataset.part = "dashboard";
      body.appendChild(host);
      this.dashboard = new GroupDashboard(host, this.api, session);
    } else {
      const host = document.createElement("div");
      host.dataset.part = "compare";
      body.appendChild(host);
      this.comparison = new MethodComparison(host, this.api, session);
    }
  }
}
