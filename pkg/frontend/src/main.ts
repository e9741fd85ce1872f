/** DOM wiring: binds the chat controller to the page. */

import { HttpServiceClient } from './api.js';
import { avatarSvg } from './avatar.js';
import { ChatController } from './controller.js';
import { UiSessionState, inputDisabled } from './state.js';

const BASE_URL =
  new URLSearchParams(window.location.search).get('api') ?? 'http://127.0.0.1:8765';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function render(state: UiSessionState): void {
  const transcript = el<HTMLDivElement>('transcript');
  transcript.innerHTML = '';
  for (const turn of state.transcript) {
    const bubble = document.createElement('div');
    bubble.className = `bubble ${turn.speaker}`;
    bubble.textContent = turn.text;
    transcript.appendChild(bubble);
  }
  transcript.scrollTop = transcript.scrollHeight;

  el<HTMLDivElement>('avatar').innerHTML = avatarSvg(state.avatarMood);

  const news = el<HTMLDivElement>('news-card');
  if (state.currentNews) {
    news.hidden = false;
    el<HTMLHeadingElement>('news-headline').textContent = state.currentNews.headline;
    el<HTMLParagraphElement>('news-lead').textContent = state.currentNews.lead;
  } else {
    news.hidden = true;
  }

  const disabled = inputDisabled(state);
  const input = el<HTMLInputElement>('utterance');
  const button = el<HTMLButtonElement>('send');
  input.disabled = disabled;
  button.disabled = disabled;

  const indicator = el<HTMLDivElement>('turn-indicator');
  indicator.textContent = disabled ? '🔇 escucha…' : '🎤 te toca hablar';
  indicator.className = disabled ? 'muted' : 'live';

  el<HTMLDivElement>('error').hidden = !state.transportError;
  if (!disabled) input.focus();
}

async function boot(): Promise<void> {
  const controller = new ChatController(new HttpServiceClient(BASE_URL));
  controller.subscribe(render);

  const form = el<HTMLFormElement>('composer');
  const input = el<HTMLInputElement>('utterance');
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const text = input.value;
    input.value = '';
    void controller.send(text);
  });
  el<HTMLButtonElement>('retry').addEventListener('click', () => {
    void controller.start();
  });

  await controller.start();
}

void boot();
