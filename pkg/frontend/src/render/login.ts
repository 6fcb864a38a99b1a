import { esc, panel } from "./layout";

export function renderLogin(error = "", notice = ""): string {
  const errorBox = error ? `<div class="form-error" id="login-error">${esc(error)}</div>` : "";
  const noticeBox = notice ? `<div class="form-notice" id="login-notice">${esc(notice)}</div>` : "";
  const login = `
  ${errorBox}${noticeBox}
  <form id="login-form" class="auth-form">
    <label class="field">Username <input type="text" id="login-username" autocomplete="username" required></label>
    <label class="field">Password <input type="password" id="login-password" autocomplete="current-password" required></label>
    <button class="btn btn-primary" type="submit" id="login-submit">Sign in</button>
  </form>`;
  const register = `
  <form id="register-form" class="auth-form">
    <p class="muted">The first account on a fresh instance becomes the administrator;
    later accounts can report incidents.</p>
    <label class="field">Username <input type="text" id="register-username" autocomplete="username" required></label>
    <label class="field">Password <input type="password" id="register-password" autocomplete="new-password" required></label>
    <button class="btn" type="submit" id="register-submit">Create account</button>
  </form>`;
  return `
  <div data-page="login" class="columns narrow">
    ${panel("Sign in", login)}
    ${panel("New account", register)}
  </div>`;
}
