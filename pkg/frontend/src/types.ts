/** Payload shapes served by the review API (see the repo README). */

export interface RunSummary {
  run_id: string;
  created: string;
  n_rows: number;
  n_differing: number;
  n_scored: number;
}

export interface AnnotatedCode {
  code: string;
  top?: string | null;
  description: string | null;
  status: "known" | "unknown_code";
  hallucination?: boolean;
}

export interface DiscrepancyRow {
  arxiv_id: string;
  link: string;
  title: string;
  abstract: string;
  sampled_under: string;
  arxiv_codes: AnnotatedCode[];
  llm_primary: AnnotatedCode[];
  llm_secondary: AnnotatedCode[];
  n_primary_wrong: number;
  n_primary_missed: number;
  n_secondary_extra: number;
  confidence: string;
  quality: number | null;
  reviewer: string;
  notes: string;
}

export interface DistributionPayload {
  distribution: Record<string, number>;
  unscored: number;
  labels: Record<string, string>;
}

export interface ScoreSubmission {
  score: number;
  notes: string;
  reviewer: string;
}
