// Shapes of the JSON bodies the service returns. Only fields the UI
// actually reads are declared; extra fields pass through untouched.

export interface SessionSettings {
  scale_mode: string;
  consistency_tol: number;
  method: string;
}

export interface ExpertView {
  index: number;
  name: string;
  alpha: number;
  judged: number;
  required: number;
  complete: boolean;
  matrix: (number | null)[][];
}

export interface SessionView {
  id: string;
  n: number;
  labels: string[];
  settings: SessionSettings;
  version: number;
  experts: ExpertView[];
}

export interface ConsistencyView {
  distance: number;
  sigma2: number | null;
  is_consistent: boolean;
}

export interface ViolationView {
  i: number;
  j: number;
  k: number;
  relative_deviation: number;
}

export interface JudgmentFeedback {
  session_id: string;
  expert: number;
  version: number;
  matrix: (number | null)[][];
  progress: { judged: number; required: number; complete: boolean };
  violations: ViolationView[];
  consistency: ConsistencyView | null;
  mu: number | null;
  w: number[] | null;
}

export interface SeView {
  lambda_max: number;
  mu: number;
  iterations: number;
  converged: boolean;
  w: number[];
  ranking: number[];
}

export interface ExpertPriorities {
  index: number;
  name: string;
  alpha: number;
  u?: number[];
  w?: number[];
  ranking?: number[];
  consistency?: ConsistencyView;
  se?: SeView;
}

export interface PrioritiesResponse {
  session_id: string;
  method: string;
  labels: string[];
  experts: ExpertPriorities[];
}

export interface GroupExpertView {
  index: number;
  name?: string;
  alpha: number;
  u: number[];
  w: number[];
  divergence: number;
  consistency: ConsistencyView;
}

export interface GroupResponse {
  n: number;
  m: number;
  labels: string[];
  alphas: number[];
  u: number[];
  w: number[];
  ranking: number[];
  experts: GroupExpertView[];
  equivalent: boolean;
}

export interface ApiErrorBody {
  error: { code: string; message: string };
}
