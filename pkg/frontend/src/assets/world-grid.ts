// Stylized world tile grid, keyed by ISO 3166-1 alpha-2.
// One square per country, positioned roughly geographically; equal tile
// size keeps small countries visible (a Mercator choropleth would hide
// Singapore behind a pixel).  Bundled so the map needs no tile service.
//
// Micro-states and overseas territories are deliberately absent — codes
// without a cell render in the overflow strip below the grid instead of
// being dropped.

export interface GridCell {
  name: string;
  col: number;
  row: number;
}

export const GRID_COLS = 25;
export const GRID_ROWS = 17;

export const WORLD_GRID: Record<string, GridCell> = {
  // Americas
  GL: { name: 'Greenland', col: 5, row: 0 },
  CA: { name: 'Canada', col: 2, row: 1 },
  US: { name: 'United States', col: 2, row: 2 },
  MX: { name: 'Mexico', col: 1, row: 3 },
  CU: { name: 'Cuba', col: 3, row: 3 },
  BS: { name: 'Bahamas', col: 4, row: 3 },
  HT: { name: 'Haiti', col: 5, row: 3 },
  DO: { name: 'Dominican Republic', col: 6, row: 3 },
  GT: { name: 'Guatemala', col: 1, row: 4 },
  BZ: { name: 'Belize', col: 2, row: 4 },
  JM: { name: 'Jamaica', col: 3, row: 4 },
  PR: { name: 'Puerto Rico', col: 4, row: 4 },
  KN: { name: 'Saint Kitts and Nevis', col: 5, row: 4 },
  AG: { name: 'Antigua and Barbuda', col: 6, row: 4 },
  SV: { name: 'El Salvador', col: 1, row: 5 },
  HN: { name: 'Honduras', col: 2, row: 5 },
  NI: { name: 'Nicaragua', col: 3, row: 5 },
  DM: { name: 'Dominica', col: 4, row: 5 },
  LC: { name: 'Saint Lucia', col: 5, row: 5 },
  BB: { name: 'Barbados', col: 6, row: 5 },
  CR: { name: 'Costa Rica', col: 1, row: 6 },
  PA: { name: 'Panama', col: 2, row: 6 },
  VE: { name: 'Venezuela', col: 3, row: 6 },
  TT: { name: 'Trinidad and Tobago', col: 4, row: 6 },
  VC: { name: 'Saint Vincent and the Grenadines', col: 5, row: 6 },
  GD: { name: 'Grenada', col: 6, row: 6 },
  EC: { name: 'Ecuador', col: 1, row: 7 },
  CO: { name: 'Colombia', col: 2, row: 7 },
  GY: { name: 'Guyana', col: 3, row: 7 },
  SR: { name: 'Suriname', col: 4, row: 7 },
  GF: { name: 'French Guiana', col: 5, row: 7 },
  PE: { name: 'Peru', col: 1, row: 8 },
  BR: { name: 'Brazil', col: 2, row: 8 },
  BO: { name: 'Bolivia', col: 3, row: 8 },
  CL: { name: 'Chile', col: 1, row: 9 },
  PY: { name: 'Paraguay', col: 2, row: 9 },
  UY: { name: 'Uruguay', col: 3, row: 9 },
  AR: { name: 'Argentina', col: 2, row: 10 },
  FK: { name: 'Falkland Islands', col: 3, row: 10 },
  CV: { name: 'Cabo Verde', col: 6, row: 10 },

  // Europe
  IS: { name: 'Iceland', col: 8, row: 0 },
  NO: { name: 'Norway', col: 11, row: 0 },
  SE: { name: 'Sweden', col: 12, row: 0 },
  FI: { name: 'Finland', col: 13, row: 0 },
  IE: { name: 'Ireland', col: 9, row: 1 },
  GB: { name: 'United Kingdom', col: 10, row: 1 },
  DK: { name: 'Denmark', col: 11, row: 1 },
  EE: { name: 'Estonia', col: 13, row: 1 },
  RU: { name: 'Russia', col: 15, row: 1 },
  PT: { name: 'Portugal', col: 8, row: 2 },
  FR: { name: 'France', col: 9, row: 2 },
  BE: { name: 'Belgium', col: 10, row: 2 },
  NL: { name: 'Netherlands', col: 11, row: 2 },
  PL: { name: 'Poland', col: 12, row: 2 },
  LV: { name: 'Latvia', col: 13, row: 2 },
  ES: { name: 'Spain', col: 8, row: 3 },
  CH: { name: 'Switzerland', col: 9, row: 3 },
  LU: { name: 'Luxembourg', col: 10, row: 3 },
  DE: { name: 'Germany', col: 11, row: 3 },
  CZ: { name: 'Czechia', col: 12, row: 3 },
  LT: { name: 'Lithuania', col: 13, row: 3 },
  IT: { name: 'Italy', col: 9, row: 4 },
  SI: { name: 'Slovenia', col: 10, row: 4 },
  AT: { name: 'Austria', col: 11, row: 4 },
  SK: { name: 'Slovakia', col: 12, row: 4 },
  BY: { name: 'Belarus', col: 13, row: 4 },
  MT: { name: 'Malta', col: 8, row: 5 },
  HR: { name: 'Croatia', col: 9, row: 5 },
  BA: { name: 'Bosnia and Herzegovina', col: 10, row: 5 },
  HU: { name: 'Hungary', col: 11, row: 5 },
  RO: { name: 'Romania', col: 12, row: 5 },
  UA: { name: 'Ukraine', col: 13, row: 5 },
  MD: { name: 'Moldova', col: 14, row: 5 },
  AL: { name: 'Albania', col: 9, row: 6 },
  ME: { name: 'Montenegro', col: 10, row: 6 },
  RS: { name: 'Serbia', col: 11, row: 6 },
  MK: { name: 'North Macedonia', col: 12, row: 6 },
  BG: { name: 'Bulgaria', col: 13, row: 6 },
  GR: { name: 'Greece', col: 10, row: 7 },
  CY: { name: 'Cyprus', col: 12, row: 7 },
  TR: { name: 'Türkiye', col: 13, row: 7 },

  // Caucasus and Central Asia
  GE: { name: 'Georgia', col: 14, row: 6 },
  AM: { name: 'Armenia', col: 14, row: 7 },
  AZ: { name: 'Azerbaijan', col: 15, row: 7 },
  KZ: { name: 'Kazakhstan', col: 16, row: 3 },
  MN: { name: 'Mongolia', col: 17, row: 3 },
  UZ: { name: 'Uzbekistan', col: 16, row: 4 },
  KG: { name: 'Kyrgyzstan', col: 17, row: 4 },
  TM: { name: 'Turkmenistan', col: 15, row: 5 },
  TJ: { name: 'Tajikistan', col: 16, row: 5 },

  // Africa
  MA: { name: 'Morocco', col: 8, row: 8 },
  DZ: { name: 'Algeria', col: 9, row: 8 },
  TN: { name: 'Tunisia', col: 10, row: 8 },
  LY: { name: 'Libya', col: 11, row: 8 },
  EG: { name: 'Egypt', col: 12, row: 8 },
  MR: { name: 'Mauritania', col: 8, row: 9 },
  ML: { name: 'Mali', col: 9, row: 9 },
  NE: { name: 'Niger', col: 10, row: 9 },
  TD: { name: 'Chad', col: 11, row: 9 },
  SD: { name: 'Sudan', col: 12, row: 9 },
  ER: { name: 'Eritrea', col: 13, row: 9 },
  SN: { name: 'Senegal', col: 7, row: 10 },
  GM: { name: 'Gambia', col: 8, row: 10 },
  BF: { name: 'Burkina Faso', col: 9, row: 10 },
  NG: { name: 'Nigeria', col: 10, row: 10 },
  CF: { name: 'Central African Republic', col: 11, row: 10 },
  SS: { name: 'South Sudan', col: 12, row: 10 },
  ET: { name: 'Ethiopia', col: 13, row: 10 },
  DJ: { name: 'Djibouti', col: 14, row: 10 },
  GW: { name: 'Guinea-Bissau', col: 7, row: 11 },
  GN: { name: 'Guinea', col: 8, row: 11 },
  CI: { name: "Côte d'Ivoire", col: 9, row: 11 },
  GH: { name: 'Ghana', col: 10, row: 11 },
  TG: { name: 'Togo', col: 11, row: 11 },
  BJ: { name: 'Benin', col: 12, row: 11 },
  CM: { name: 'Cameroon', col: 13, row: 11 },
  SO: { name: 'Somalia', col: 14, row: 11 },
  SL: { name: 'Sierra Leone', col: 7, row: 12 },
  LR: { name: 'Liberia', col: 8, row: 12 },
  GQ: { name: 'Equatorial Guinea', col: 9, row: 12 },
  GA: { name: 'Gabon', col: 10, row: 12 },
  CG: { name: 'Congo', col: 11, row: 12 },
  CD: { name: 'Democratic Republic of the Congo', col: 12, row: 12 },
  UG: { name: 'Uganda', col: 13, row: 12 },
  KE: { name: 'Kenya', col: 14, row: 12 },
  ST: { name: 'Sao Tome and Principe', col: 8, row: 13 },
  AO: { name: 'Angola', col: 10, row: 13 },
  RW: { name: 'Rwanda', col: 11, row: 13 },
  BI: { name: 'Burundi', col: 12, row: 13 },
  TZ: { name: 'Tanzania', col: 13, row: 13 },
  SC: { name: 'Seychelles', col: 15, row: 13 },
  NA: { name: 'Namibia', col: 9, row: 14 },
  ZM: { name: 'Zambia', col: 10, row: 14 },
  MW: { name: 'Malawi', col: 11, row: 14 },
  MZ: { name: 'Mozambique', col: 12, row: 14 },
  KM: { name: 'Comoros', col: 13, row: 14 },
  MG: { name: 'Madagascar', col: 14, row: 14 },
  BW: { name: 'Botswana', col: 10, row: 15 },
  ZW: { name: 'Zimbabwe', col: 11, row: 15 },
  SZ: { name: 'Eswatini', col: 12, row: 15 },
  MU: { name: 'Mauritius', col: 14, row: 15 },
  ZA: { name: 'South Africa', col: 10, row: 16 },
  LS: { name: 'Lesotho', col: 11, row: 16 },

  // Middle East
  LB: { name: 'Lebanon', col: 13, row: 8 },
  SY: { name: 'Syria', col: 14, row: 8 },
  IQ: { name: 'Iraq', col: 15, row: 8 },
  IR: { name: 'Iran', col: 16, row: 8 },
  IL: { name: 'Israel', col: 14, row: 9 },
  PS: { name: 'Palestine', col: 15, row: 9 },
  JO: { name: 'Jordan', col: 16, row: 9 },
  KW: { name: 'Kuwait', col: 17, row: 9 },
  SA: { name: 'Saudi Arabia', col: 15, row: 10 },
  BH: { name: 'Bahrain', col: 16, row: 10 },
  QA: { name: 'Qatar', col: 17, row: 10 },
  AE: { name: 'United Arab Emirates', col: 18, row: 10 },
  YE: { name: 'Yemen', col: 15, row: 11 },
  OM: { name: 'Oman', col: 16, row: 11 },

  // South and East Asia
  AF: { name: 'Afghanistan', col: 15, row: 6 },
  PK: { name: 'Pakistan', col: 16, row: 6 },
  IN: { name: 'India', col: 17, row: 6 },
  BD: { name: 'Bangladesh', col: 18, row: 6 },
  NP: { name: 'Nepal', col: 17, row: 5 },
  BT: { name: 'Bhutan', col: 18, row: 5 },
  CN: { name: 'China', col: 18, row: 4 },
  KP: { name: 'North Korea', col: 19, row: 4 },
  JP: { name: 'Japan', col: 20, row: 4 },
  KR: { name: 'South Korea', col: 19, row: 5 },
  TW: { name: 'Taiwan', col: 20, row: 5 },
  HK: { name: 'Hong Kong', col: 19, row: 6 },
  MO: { name: 'Macao', col: 20, row: 6 },
  MV: { name: 'Maldives', col: 16, row: 7 },
  LK: { name: 'Sri Lanka', col: 17, row: 7 },
  MM: { name: 'Myanmar', col: 18, row: 7 },
  LA: { name: 'Laos', col: 19, row: 7 },
  VN: { name: 'Vietnam', col: 20, row: 7 },
  TH: { name: 'Thailand', col: 18, row: 8 },
  KH: { name: 'Cambodia', col: 19, row: 8 },
  PH: { name: 'Philippines', col: 20, row: 8 },
  MY: { name: 'Malaysia', col: 18, row: 9 },
  SG: { name: 'Singapore', col: 19, row: 9 },
  BN: { name: 'Brunei', col: 20, row: 9 },
  ID: { name: 'Indonesia', col: 19, row: 10 },
  TL: { name: 'Timor-Leste', col: 20, row: 10 },

  // Oceania
  PW: { name: 'Palau', col: 21, row: 8 },
  FM: { name: 'Micronesia', col: 22, row: 8 },
  MH: { name: 'Marshall Islands', col: 23, row: 8 },
  PG: { name: 'Papua New Guinea', col: 21, row: 9 },
  SB: { name: 'Solomon Islands', col: 22, row: 9 },
  NR: { name: 'Nauru', col: 23, row: 9 },
  KI: { name: 'Kiribati', col: 24, row: 9 },
  VU: { name: 'Vanuatu', col: 21, row: 10 },
  FJ: { name: 'Fiji', col: 22, row: 10 },
  TV: { name: 'Tuvalu', col: 23, row: 10 },
  WS: { name: 'Samoa', col: 24, row: 10 },
  AU: { name: 'Australia', col: 20, row: 11 },
  NC: { name: 'New Caledonia', col: 21, row: 11 },
  TO: { name: 'Tonga', col: 22, row: 11 },
  NZ: { name: 'New Zealand', col: 21, row: 12 },
};

/** Country names for the submission form's multi-select, sorted for display. */
export function countryOptions(): Array<{ code: string; name: string }> {
  return Object.entries(WORLD_GRID)
    .map(([code, cell]) => ({ code, name: cell.name }))
    .sort((a, b) => a.name.localeCompare(b.name));
}
