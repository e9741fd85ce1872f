/** The avatar face is a pure function of the detected mood. */

import type { AvatarMood } from './api.js';

export function avatarAssetFor(mood: AvatarMood): string {
  return `avatar-${mood}`;
}

const MOUTHS: Record<AvatarMood, string> = {
  happy: '<path d="M30 62 Q50 80 70 62" stroke="#1a1a1a" stroke-width="5" fill="none" stroke-linecap="round"/>',
  neutral: '<line x1="34" y1="66" x2="66" y2="66" stroke="#1a1a1a" stroke-width="5" stroke-linecap="round"/>',
  sad: '<path d="M30 72 Q50 56 70 72" stroke="#1a1a1a" stroke-width="5" fill="none" stroke-linecap="round"/>',
};

/** Inline SVG dog face, eyes and mouth tracking the mood. */
export function avatarSvg(mood: AvatarMood): string {
  const eyeY = mood === 'sad' ? 42 : 38;
  return [
    `<svg viewBox="0 0 100 100" role="img" aria-label="avatar ${mood}" data-asset="${avatarAssetFor(mood)}">`,
    '<ellipse cx="22" cy="18" rx="12" ry="20" fill="#b5854e"/>',
    '<ellipse cx="78" cy="18" rx="12" ry="20" fill="#b5854e"/>',
    '<circle cx="50" cy="50" r="40" fill="#d9a868"/>',
    `<circle cx="35" cy="${eyeY}" r="6" fill="#1a1a1a"/>`,
    `<circle cx="65" cy="${eyeY}" r="6" fill="#1a1a1a"/>`,
    '<ellipse cx="50" cy="54" rx="8" ry="6" fill="#1a1a1a"/>',
    MOUTHS[mood],
    '</svg>',
  ].join('');
}
