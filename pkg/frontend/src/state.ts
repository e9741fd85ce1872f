/** UI session state and its pure transitions.
 *
 * The input stays disabled whenever it is the bot's turn (the muted-mic
 * convention); a submit is accepted only when the user owns the turn and
 * the text is non-empty after trimming, which also makes double submits
 * while a request is pending no-ops.
 */

import type { AvatarMood, NewsPayload, SessionCreated, UtteranceResponse } from './api.js';

export type TurnOwner = 'user' | 'bot';

export interface RenderedTurn {
  speaker: TurnOwner;
  text: string;
}

export interface UiSessionState {
  sessionId: string | null;
  transcript: RenderedTurn[];
  avatarMood: AvatarMood;
  turnOwner: TurnOwner;
  currentNews: NewsPayload | null;
  closed: boolean;
  transportError: boolean;
}

export function initialState(): UiSessionState {
  return {
    sessionId: null,
    transcript: [],
    avatarMood: 'neutral',
    turnOwner: 'bot',
    currentNews: null,
    closed: false,
    transportError: false,
  };
}

export function sessionOpened(state: UiSessionState,
                              created: SessionCreated): UiSessionState {
  return {
    ...state,
    sessionId: created.session_id,
    transcript: [...state.transcript, { speaker: 'bot', text: created.opener_text }],
    avatarMood: created.avatar_mood,
    turnOwner: 'user',
    transportError: false,
  };
}

export function inputDisabled(state: UiSessionState): boolean {
  return state.turnOwner !== 'user' || state.sessionId === null || state.closed;
}

export interface SubmitOutcome {
  state: UiSessionState;
  send: boolean;
}

/** Optimistically render the user's turn and hand the turn to the bot. */
export function submitUtterance(state: UiSessionState, text: string): SubmitOutcome {
  if (inputDisabled(state) || text.trim() === '') {
    return { state, send: false };
  }
  return {
    send: true,
    state: {
      ...state,
      transcript: [...state.transcript, { speaker: 'user', text }],
      turnOwner: 'bot',
      transportError: false,
    },
  };
}

/** Append the bot's reply, move the avatar, surface any news card. */
export function renderTurn(state: UiSessionState,
                           response: UtteranceResponse): UiSessionState {
  return {
    ...state,
    transcript: [...state.transcript, { speaker: 'bot', text: response.reply }],
    avatarMood: response.avatar_mood,
    currentNews: response.news ?? state.currentNews,
    turnOwner: 'user',
    closed: response.state === 'closed',
    transportError: false,
  };
}

/** Failure atomicity: the transcript is left exactly as it was. */
export function transportFailure(state: UiSessionState): UiSessionState {
  return { ...state, turnOwner: 'user', transportError: true };
}
