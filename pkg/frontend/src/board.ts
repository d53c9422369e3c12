/** Board state machine: a pure view over the assistant service.
 *
 * All game knowledge lives server-side; this controller only records what
 * the user typed, forwards it, and mirrors the responses.  One mutation
 * (start/submit/undo) is in flight at a time; reads may overlap.
 */

import type { AssistApi, DictionaryInfo } from "./api.js";
import { ServiceError } from "./api.js";
import type { CellColor } from "./colors.js";
import { colorsToDigits, cycleColor } from "./colors.js";

export interface SubmittedRow {
  letters: string[];
  colors: CellColor[];
}

export interface BoardState {
  dictionaries: DictionaryInfo[];
  dictionary: string | null;
  sessionId: string | null;
  k: number;
  rows: SubmittedRow[];
  draftLetters: string[];
  draftColors: CellColor[];
  feasible: number | null;
  suggestion: { word: string; mode: string } | null;
  feasibleWords: string[] | null;
  feasibleTotal: number | null;
  banner: string | null;
  errorRow: number | null;
  pending: boolean;
}

export type Listener = (state: Readonly<BoardState>) => void;

const LIST_LIMIT = 50;

export class BoardController {
  private state: BoardState = {
    dictionaries: [],
    dictionary: null,
    sessionId: null,
    k: 0,
    rows: [],
    draftLetters: [],
    draftColors: [],
    feasible: null,
    suggestion: null,
    feasibleWords: null,
    feasibleTotal: null,
    banner: null,
    errorRow: null,
    pending: false,
  };
  private listeners: Listener[] = [];

  constructor(private readonly api: AssistApi) {}

  getState(): Readonly<BoardState> {
    return this.state;
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  async loadDictionaries(): Promise<void> {
    try {
      this.state.dictionaries = await this.api.listDictionaries();
    } catch (e) {
      this.state.banner = describe(e);
    }
    this.emit();
  }

  /** Create a fresh session; clears the board. */
  async start(dictionary: string): Promise<boolean> {
    if (this.state.pending) return false;
    this.state.pending = true;
    this.emit();
    try {
      const created = await this.api.createSession(dictionary);
      this.state.dictionary = dictionary;
      this.state.sessionId = created.session;
      this.state.k = created.k;
      this.state.rows = [];
      this.state.draftLetters = [];
      this.state.draftColors = [];
      this.state.feasible = created.size;
      this.state.feasibleWords = null;
      this.state.feasibleTotal = null;
      this.state.banner = null;
      this.state.errorRow = null;
      await this.refreshSuggestion();
    } catch (e) {
      this.state.banner = describe(e);
    } finally {
      this.state.pending = false;
      this.emit();
    }
    return this.state.sessionId !== null;
  }

  /** Local edits are always allowed; only guess length is enforced here. */
  typeLetter(letter: string): void {
    if (letter.length !== 1 || this.state.draftLetters.length >= this.state.k) return;
    this.state.draftLetters.push(letter.toUpperCase());
    this.state.draftColors.push("gray");
    this.emit();
  }

  backspace(): void {
    this.state.draftLetters.pop();
    this.state.draftColors.pop();
    this.emit();
  }

  tapCell(col: number): void {
    const current = this.state.draftColors[col];
    if (current === undefined) return;
    this.state.draftColors[col] = cycleColor(current);
    this.emit();
  }

  canSubmit(): boolean {
    return (
      !this.state.pending &&
      this.state.sessionId !== null &&
      this.state.draftLetters.length === this.state.k &&
      this.state.k > 0
    );
  }

  async submitRow(): Promise<boolean> {
    if (!this.canSubmit()) return false;
    const session = this.state.sessionId as string;
    const letters = [...this.state.draftLetters];
    const colors = [...this.state.draftColors];
    this.state.pending = true;
    this.emit();
    try {
      const resp = await this.api.postFeedback(
        session,
        letters.join(""),
        colorsToDigits(colors),
      );
      this.state.rows.push({ letters, colors });
      this.state.draftLetters = [];
      this.state.draftColors = [];
      this.state.feasible = resp.feasible;
      this.state.banner = null;
      this.state.errorRow = null;
      await this.refreshSuggestion();
      await this.refreshPanel();
      this.state.pending = false;
      this.emit();
      return true;
    } catch (e) {
      // inconsistent feedback keeps the draft so the colors can be fixed
      if (e instanceof ServiceError && e.code === "inconsistent_feedback") {
        this.state.errorRow = this.state.rows.length;
      }
      this.state.banner = describe(e);
      this.state.pending = false;
      this.emit();
      return false;
    }
  }

  async undo(): Promise<boolean> {
    if (this.state.pending || this.state.sessionId === null) return false;
    const session = this.state.sessionId;
    this.state.pending = true;
    this.emit();
    try {
      const resp = await this.api.undoLast(session);
      this.state.rows.pop();
      this.state.feasible = resp.feasible;
      this.state.banner = null;
      this.state.errorRow = null;
      await this.refreshSuggestion();
      await this.refreshPanel();
      this.state.pending = false;
      this.emit();
      return true;
    } catch (e) {
      this.state.banner = describe(e);
      this.state.pending = false;
      this.emit();
      return false;
    }
  }

  async showFeasible(): Promise<void> {
    if (this.state.sessionId === null) return;
    try {
      const resp = await this.api.listFeasible(this.state.sessionId, LIST_LIMIT);
      this.state.feasibleWords = resp.words;
      this.state.feasibleTotal = resp.total;
    } catch (e) {
      this.state.banner = describe(e);
    }
    this.emit();
  }

  hidePanel(): void {
    this.state.feasibleWords = null;
    this.state.feasibleTotal = null;
    this.emit();
  }

  dismissBanner(): void {
    this.state.banner = null;
    this.state.errorRow = null;
    this.emit();
  }

  private async refreshSuggestion(): Promise<void> {
    if (this.state.sessionId === null) return;
    const s = await this.api.getSuggestion(this.state.sessionId);
    this.state.suggestion = { word: s.word, mode: s.mode };
    this.state.feasible = s.feasible;
  }

  private async refreshPanel(): Promise<void> {
    if (this.state.feasibleWords === null || this.state.sessionId === null) return;
    const resp = await this.api.listFeasible(this.state.sessionId, LIST_LIMIT);
    this.state.feasibleWords = resp.words;
    this.state.feasibleTotal = resp.total;
  }
}

function describe(e: unknown): string {
  if (e instanceof ServiceError) return e.detail || e.code;
  return e instanceof Error ? e.message : String(e);
}
